#ifndef BMP_GRAPH6_HPP
#define BMP_GRAPH6_HPP

#include <string>
#include <string_view>

#include "graph.hpp"

namespace bmp {

// graph6 interchange format (McKay): 6-bit chunks offset by 63, upper
// triangle in column-major order. Strict decoding: padding bits must be
// zero, so decode and encode are mutually inverse byte-for-byte.
Graph parse_graph6(std::string_view bytes);
std::string encode_graph6(const Graph& g);

} // namespace bmp

#endif
