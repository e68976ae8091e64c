#pragma once

// A subset B of the AR sequences of a catalog, bit k <=> k-th sequence.
//
// Hex form: the subset read as the integer sum of 2^k, printed in lowercase
// hex without leading zeros ("0" for the empty set). So on three sequences
// {0} is "1" and {1,2} is "6".

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <string_view>

namespace exstructa {

using ArSet = boost::dynamic_bitset<>;

std::string to_hex(const ArSet& b);
ArSet from_hex(std::string_view hex, std::size_t bits);
ArSet ar_set_from_index(unsigned long long index, std::size_t bits);
std::string to_index_list(const ArSet& b);  // "{0,2}"

}  // namespace exstructa
