// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <string>
#include <vector>

#include "weilcid/matrix.hpp"
#include "weilcid/weil.hpp"

namespace weilcid {

/// Basis symbols (1, pi, ..., pi^g, v, ..., v^{g-1}) of Z[pi, v].
std::vector<std::string> basis(unsigned g);

/// Multiplication by pi on Z[pi, v], column-action in the basis above
/// (column j holds the coordinates of pi * b_j). Rejects g < 2.
IntMatrix frobenius_matrix(const WeilPoly& w);

/// Multiplication by v = q/pi in the same basis.
IntMatrix verschiebung_matrix(const WeilPoly& w);

/// disc(Z[pi, v]) as the determinant of the trace form on the basis. The
/// value is cross-checked against disc(f) / q^{g(g-1)}; a mismatch throws
/// InvariantError.
Integer order_discriminant(const WeilPoly& w);

enum class Applicability { certain, unknown };

std::string to_string(Applicability a);

/// certain when l does not divide order_discriminant(w), so Z[pi, v] is
/// maximal at l. Rejects l = p and non-prime l.
Applicability guaranteed_applicable(const WeilPoly& w, std::uint64_t l);

/// Order of the Frobenius matrix mod n, using f as its characteristic
/// polynomial. Throws NotCoprimeError when gcd(n, q) > 1.
Integer frobenius_order_mod(const WeilPoly& w, const IntMatrix& sigma, const Integer& n);

}  // namespace weilcid
