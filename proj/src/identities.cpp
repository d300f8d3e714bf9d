#include "akivis/identities.hpp"

#include "akivis/errors.hpp"

namespace akivis {

namespace {

std::vector<std::string> names(const AkivisSpec& akv, std::initializer_list<std::size_t> idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(akv.basis()->name(i));
  return out;
}

CheckReport make_report(std::string identity, const CheckOptions& opts) {
  if (opts.witness_cap == 0) throw InvalidInput("witness cap must be positive");
  CheckReport r;
  r.identity = std::move(identity);
  r.witness_cap = opts.witness_cap;
  return r;
}

Parity parity_of(const Vector& v) {
  auto p = v.parity();
  if (!p) throw InvalidInput("expected a nonzero homogeneous element");
  return *p;
}

}  // namespace

std::pair<Vector, Vector> akivis_identity_sides(const AkivisSpec& akv, const Vector& x,
                                                const Vector& y, const Vector& z) {
  const Parity a = parity_of(x);
  const Parity b = parity_of(y);
  const Parity c = parity_of(z);
  auto A = [&](const Vector& u, const Vector& v, const Vector& w) {
    return ternary_eval(akv, u, v, w);
  };
  Vector lhs = super_jacobian(akv, x, y, z);
  Vector rhs = A(x, y, z);
  rhs += Scalar(koszul(a, b + c)) * A(y, z, x);
  rhs += Scalar(koszul(c, b + a)) * A(z, x, y);
  rhs -= Scalar(koszul(a, b)) * A(y, x, z);
  rhs -= Scalar(koszul(a, b + c) * koszul(b, c)) * A(z, y, x);
  rhs -= Scalar(koszul(c, b)) * A(x, z, y);
  return {std::move(lhs), std::move(rhs)};
}

CheckReport check_akivis_identity(const AkivisSpec& akv, CheckOptions opts) {
  CheckReport report = make_report("akivis", opts);
  const std::size_t n = akv.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        auto [lhs, rhs] = akivis_identity_sides(akv, akv.basis_vector(i), akv.basis_vector(j),
                                                akv.basis_vector(k));
        ++report.checked;
        if (lhs != rhs) report.record(names(akv, {i, j, k}), "", std::move(lhs), std::move(rhs));
      }
    }
  }
  return report;
}

CheckReport check_superanticommutative(const AkivisSpec& akv, CheckOptions opts) {
  CheckReport report = make_report("superanticomm", opts);
  const GradedBasis& basis = *akv.basis();
  const std::size_t n = akv.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& lhs = akv.bracket(i, j);
      Vector rhs = Scalar(-koszul(basis.parity(i), basis.parity(j))) * akv.bracket(j, i);
      ++report.checked;
      if (lhs != rhs) report.record(names(akv, {i, j}), "", lhs, std::move(rhs));
    }
  }
  return report;
}

CheckReport check_lie(const AkivisSpec& akv, CheckOptions opts) {
  CheckReport report = make_report("lie", opts);
  const std::size_t n = akv.dim();
  const Vector zero(akv.basis());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checked;
        const Vector& a = akv.ternary(i, j, k);
        if (!a.is_zero()) report.record(names(akv, {i, j, k}), "ternary", a, zero);
        Vector sj = super_jacobian(akv, akv.basis_vector(i), akv.basis_vector(j),
                                   akv.basis_vector(k));
        if (!sj.is_zero())
          report.record(names(akv, {i, j, k}), "super-jacobian", std::move(sj), zero);
      }
    }
  }
  return report;
}

CheckReport check_malcev_ternary(const AkivisSpec& akv, CheckOptions opts) {
  CheckReport report = make_report("malcev-ternary", opts);
  const std::size_t n = akv.dim();
  const Scalar sixth(1, 6);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++report.checked;
        const Vector& lhs = akv.ternary(i, j, k);
        Vector rhs = sixth * super_jacobian(akv, akv.basis_vector(i), akv.basis_vector(j),
                                            akv.basis_vector(k));
        if (lhs != rhs) report.record(names(akv, {i, j, k}), "", lhs, std::move(rhs));
      }
    }
  }
  return report;
}

std::pair<Vector, Vector> malcev_instance_sides(const AkivisSpec& akv, MalcevPattern pattern,
                                                const std::array<Vector, 4>& args) {
  auto br = [&](const Vector& u, const Vector& v) { return bracket_eval(akv, u, v); };
  const auto& [a, b, c, d] = args;
  Vector rhs = br(br(a, c), br(b, d));
  Vector lhs(akv.basis());
  switch (pattern) {
    case MalcevPattern::four_element:
      lhs = br(br(br(a, b), c), d) - br(br(br(b, c), d), a);
      break;
    case MalcevPattern::squares:
      lhs = Scalar(2) * br(br(br(a, b), c), d) - br(br(br(b, a), d), c);
      break;
    case MalcevPattern::sagle:
      for (const auto& v : args)
        if (!v.is_zero() && v.parity() != Parity::even)
          throw InvalidInput("the sagle pattern takes even arguments only");
      lhs = br(br(br(a, b), c), d) + br(br(br(b, c), d), a) + br(br(br(c, d), a), b) +
            br(br(br(d, a), b), c);
      break;
  }
  return {std::move(lhs), std::move(rhs)};
}

CheckReport check_malcev_instance(const AkivisSpec& akv, MalcevPattern pattern,
                                  const std::array<Vector, 4>& args) {
  CheckReport report = make_report("malcev-instance", {});
  for (const auto& v : args)
    if (!v.is_homogeneous()) throw InvalidInput("malcev instance arguments must be homogeneous");
  auto [lhs, rhs] = malcev_instance_sides(akv, pattern, args);
  report.checked = 1;
  if (lhs != rhs) {
    std::vector<std::string> tuple;
    for (const auto& v : args) tuple.push_back(v.to_string());
    report.record(std::move(tuple), to_string(pattern), std::move(lhs), std::move(rhs));
  }
  return report;
}

std::string to_string(MalcevPattern p) {
  switch (p) {
    case MalcevPattern::four_element: return "four-element";
    case MalcevPattern::squares: return "squares";
    case MalcevPattern::sagle: return "sagle";
  }
  return "unknown";
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::lie: return "lie";
    case Classification::malcev_presented: return "malcev-presented";
    case Classification::proper_akivis: return "proper-akivis";
    case Classification::not_akivis: return "not-akivis";
  }
  return "unknown";
}

Classification classify(const AkivisSpec& akv) {
  const CheckOptions one{1};
  if (!check_akivis_identity(akv, one).passed()) return Classification::not_akivis;
  if (check_lie(akv, one).passed()) return Classification::lie;
  if (check_malcev_ternary(akv, one).passed()) return Classification::malcev_presented;
  return Classification::proper_akivis;
}

}  // namespace akivis
