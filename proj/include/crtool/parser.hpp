// Text syntax for polynomials:
//   variables  z1..z9, zb1..zb9 (z, zb for index 1), u1..u9, w1..w9,
//              wb1..wb9, x1..x9, y1..y9, v1..v9, lam, px, py, eps, mu,
//              sigma, nu, rho, tau
//   operators  + - * ^ (multiplication always explicit), parentheses
//   literals   rational p or p/q, imaginary unit I, products like 3/2*I
//   functions  conj(...), Re(...), Im(...) expanded at parse time
#pragma once

#include <string>

#include "crtool/poly.hpp"

namespace crtool {

PolyCC parse_poly(const std::string& text);

}  // namespace crtool
