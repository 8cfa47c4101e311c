// Certificate checking by direct recount.  Deliberately self-contained: only
// the core counting primitives are shared with the chain construction.

#include <cmath>
#include <set>
#include <string>

#include "stardisc/adversary.hpp"

namespace stardisc {
namespace {

class Report {
 public:
  explicit Report(VerificationReport& r) : r_(r) {}

  template <typename... Parts>
  void fail(const Parts&... parts) {
    std::string msg;
    (msg += ... += to_text(parts));
    r_.failures.push_back(std::move(msg));
  }

 private:
  static std::string to_text(const std::string& s) { return s; }
  static std::string to_text(const char* s) { return s; }
  template <typename T>
  static std::string to_text(const T& v) { return std::to_string(v); }

  VerificationReport& r_;
};

std::string step_tag(std::size_t t) { return "step " + std::to_string(t) + ": "; }

bool in_range(const Counters& a, std::int64_t a_max) {
  return ((a.array() >= 0) && (a.array() <= a_max)).all();
}

}  // namespace

VerificationReport verify_certificate(const PointSet& X,
                                      const ChainCertificate& cert) {
  VerificationReport result;
  Report report(result);
  const auto& p = cert.params;
  const Index d = p.dim;

  if (d != X.dim()) {
    report.fail("certificate dimension ", d, " does not match point set dimension ",
                X.dim());
    return result;
  }
  if (d < 2) {
    report.fail("dimension must be at least 2");
    return result;
  }
  if (!(p.epsilon > 0.0) || !(p.beta > 0.0)) {
    report.fail("epsilon and beta must be positive");
    return result;
  }
  const double dd = static_cast<double>(d);
  if (!(p.beta / 2.0 * std::pow(1.0 - 1.0 / dd, dd) > 2.0))
    report.fail("beta fails the soundness inequality");
  const double width = p.beta * p.epsilon;
  if (p.a_max < 0 || static_cast<double>(p.a_max) * width > 1.0 ||
      static_cast<double>(p.a_max + 1) * width <= 1.0)
    report.fail("a_max ", p.a_max, " is not floor(1/(beta*epsilon))");

  const double h = p.beta * p.epsilon / dd;
  auto corner = [&](const Counters& a) -> Vector {
    Vector y(d);
    for (Index j = 0; j < d; ++j) y(j) = 1.0 - static_cast<double>(a(j)) * h;
    return y;
  };
  auto inside = [&](Index i, const Vector& y) {
    for (Index j = 0; j < d; ++j)
      if (!(X.points()(i, j) <= y(j))) return false;
    return true;
  };

  if (cert.k != static_cast<Index>(cert.steps.size()))
    report.fail("k = ", cert.k, " but the chain has ", cert.steps.size(), " steps");

  Counters current = Counters::Zero(d);
  std::set<Index> captured;
  for (std::size_t t = 0; t < cert.steps.size(); ++t) {
    const auto& s = cert.steps[t];
    const auto& before = s.before.counters;
    const auto& after = s.after.counters;
    if (before.size() != d || after.size() != d) {
      report.fail(step_tag(t), "corner has the wrong number of counters");
      return result;
    }
    if (before != current)
      report.fail(step_tag(t), "corner does not continue the previous step");
    if (!in_range(before, p.a_max) || !in_range(after, p.a_max))
      report.fail(step_tag(t), "counter outside [0, ", p.a_max, "]");

    const Counters diff = after - before;
    const bool index_ok = s.incremented_index >= 0 && s.incremented_index < d;
    if (!index_ok || diff.cwiseAbs().sum() != 1 ||
        diff(s.incremented_index) != 1)
      report.fail(step_tag(t), "must increment exactly counter ",
                  s.incremented_index, " by one");

    const Index i = s.captured_point;
    if (i < 0 || i >= X.size()) {
      report.fail(step_tag(t), "captured point ", i, " out of range");
    } else {
      if (!captured.insert(i).second)
        report.fail(step_tag(t), "point ", i, " captured twice");
      if (!inside(i, corner(before)) || inside(i, corner(after)))
        report.fail(step_tag(t), "point ", i, " is not in the shrunk slab");
    }
    current = after;
  }

  const auto& terminal = cert.terminal.counters;
  if (terminal.size() != d) {
    report.fail("terminal corner has the wrong number of counters");
    return result;
  }
  if (terminal != current)
    report.fail("terminal corner does not match the last step");
  if (!in_range(terminal, p.a_max))
    report.fail("terminal counter outside [0, ", p.a_max, "]");
  const Index movable = (terminal.array() <= p.a_max - 1).count();
  if (2 * movable >= d)
    report.fail("chain stopped early: ", movable, " of ", d,
                " counters can still move");
  const auto floor_len = static_cast<std::int64_t>(d / 2) * p.a_max;
  if (static_cast<std::int64_t>(cert.steps.size()) < floor_len)
    report.fail("chain length ", cert.steps.size(), " below guaranteed ", floor_len);
  return result;
}

}  // namespace stardisc
