#pragma once

#include <map>
#include <string>
#include <variant>

#include "gdc/measures.hpp"

namespace gdc::witness {

// Pair on [3] equal at p = 1/2 only.
RERMeasure thm_a_nu1();
RERMeasure thm_a_nu2();

// Exchangeable pair on n = 4; the second member depends on p through g = p(1-p).
ExchRERMeasure thm_c_nu1();
ExchRERMeasure thm_c_nu2(const Rational& p);

// Rotation/reflection-invariant pair on [4], equal for all p.
RERMeasure thm_e_nu1();
RERMeasure thm_e_nu2();

// Exchangeable pair on n = 6, equal for all p.
ExchRERMeasure thm_f_nu1();
ExchRERMeasure thm_f_nu2();

// Half {12|3|4}, half {1|2|34}: its p = 1/2 image is not positively associated.
RERMeasure posass4();

// Uniform on configurations with exactly 1 or n-1 ones.
ColorMeasure level_measure(int n);

// (1/9) Pi_{9/10} + (8/9) Pi_{9/20} on [3].
ColorMeasure fkg_example();

using Entry = std::variant<RERMeasure, ExchRERMeasure, ColorMeasure>;

// Named fixtures; the p-dependent member is evaluated at p.
std::map<std::string, Entry> catalog(const Rational& p);

}  // namespace gdc::witness
