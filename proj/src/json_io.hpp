#pragma once

#include <string>

#include "closed_forms.hpp"
#include "polynomial.hpp"

namespace cacti {

/// {"vars":[...],"terms":[{"exps":[...],"coef":"num/den"},...]} with terms in
/// canonical order.
std::string poly_to_json(const MVPolynomial& p);
MVPolynomial poly_from_json(const std::string& text);

/// Circle grammar "color:len[,len...];color:...". Lengths are integers,
/// "num/den" literals, or symbols matching [a-z][a-z0-9_]*; the colors must
/// form 1..k.
CircleSet parse_circles(const std::string& text);

}  // namespace cacti
