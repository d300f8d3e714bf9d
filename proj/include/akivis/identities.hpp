#pragma once

#include <array>
#include <string>
#include <utility>

#include "akivis/check_report.hpp"
#include "akivis/superalgebra.hpp"

namespace akivis {

// Both sides of the defining Akivis identity for homogeneous x, y, z:
// the signed cyclic sum of double brackets, and the signed alternating sum
// of six ternary values.
std::pair<Vector, Vector> akivis_identity_sides(const AkivisSpec& akv, const Vector& x,
                                                const Vector& y, const Vector& z);

CheckReport check_akivis_identity(const AkivisSpec& akv, CheckOptions opts = {});
CheckReport check_superanticommutative(const AkivisSpec& akv, CheckOptions opts = {});
// A == 0 and SJ == 0 on every basis triple.
CheckReport check_lie(const AkivisSpec& akv, CheckOptions opts = {});
// A == SJ / 6 on every basis triple.
CheckReport check_malcev_ternary(const AkivisSpec& akv, CheckOptions opts = {});

// The two degree-4 instance patterns evaluated in the bracket algebra.
//   four_element (a, b, c, d):  ((ab)c)d - ((bc)d)a   vs  (ac)(bd)
//   squares      (a, b, c, d):  2((ab)c)d - ((ba)d)c  vs  (ac)(bd)
// With (x, y, x, y) the squares pattern reads 2((xy)x)y - ((yx)y)x vs x^2 y^2.
// The sagle pattern is the classical ungraded Malcev identity
//   ((ab)c)d + ((bc)d)a + ((cd)a)b + ((da)b)c  vs  (ac)(bd)
// and accepts even arguments only.
enum class MalcevPattern { four_element, squares, sagle };

std::string to_string(MalcevPattern p);
std::pair<Vector, Vector> malcev_instance_sides(const AkivisSpec& akv, MalcevPattern pattern,
                                                const std::array<Vector, 4>& args);
// Passes iff both sides agree.
CheckReport check_malcev_instance(const AkivisSpec& akv, MalcevPattern pattern,
                                  const std::array<Vector, 4>& args);

enum class Classification { lie, malcev_presented, proper_akivis, not_akivis };

std::string to_string(Classification c);
Classification classify(const AkivisSpec& akv);

}  // namespace akivis
