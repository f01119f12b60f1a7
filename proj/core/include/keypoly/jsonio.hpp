#ifndef KEYPOLY_JSONIO_HPP
#define KEYPOLY_JSONIO_HPP

#include "keypoly/bipoly.hpp"

#include <string>

namespace keypoly {

/* Wire format, bit-exact round-trip:
 * {"vars":["x","lambda"],"terms":[{"exp":[i,j],"coef":"p/q"},...]}
 * with terms sorted lexicographically by exp. */
std::string bipoly_to_json(const BiPoly & p);
BiPoly bipoly_from_json(const std::string & s);

std::string unipoly_to_json(const UPoly & p, const std::string & var);
UPoly unipoly_from_json(const std::string & s);

} // namespace keypoly

#endif
