#pragma once

#include <cstddef>
#include <string>

#include "proxpt/metric.hpp"

namespace proxpt {

/// Triangular numbers lambda_n = n(n+1)/2 for n = 1..3N on the real line with
/// |x - y|; A = {lambda_3n}, B = {lambda_3n-1}, T(lambda_3n) = lambda_3n-1.
/// Point ids are the decimal values ("6", "21", ...).
FiniteInstance triangular(std::size_t n, bool exact_int = false);

/// Planar fixture: A = {(0,y)}, B = {(1,y)} for y in {0} and 4^-j, j = 0..k;
/// T(0,y) = (1, y/4) except T(0, 4^-k) = T(0,0) = (1,0). Ids a0/b0 for y = 0,
/// a{j+1}/b{j+1} for y = 4^-j.
FiniteInstance quartic(std::size_t k);

/// A = {(0,0),(0,1)}, B = {(2,0),(2,1)}, T(0,y) = (2,y). Two best proximity points.
FiniteInstance strip();

/// Scaling fixture with n proximal pairs: A = {(0, i/n)}, B = {(1, i/n)},
/// T(a_i) = b_floor(i/2). Ids are zero-padded so id order is index order.
FiniteInstance chain(std::size_t n);

/// name in {triangular, quartic, strip, chain}. ParamError on bad name or size.
FiniteInstance generate_builtin(const std::string& name, std::size_t size, bool exact_int = false);

/// Size used when none is given on the command line.
std::size_t default_builtin_size(const std::string& name);

}  // namespace proxpt
