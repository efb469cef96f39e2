#ifndef CATBOX_TESTS_CHECKLIST_HPP
#define CATBOX_TESTS_CHECKLIST_HPP

// Collects named checks for the acceptance and property binaries, which
// report one line per group instead of one per assertion.

#include "catbox/evaluate.hpp"
#include "catbox/rational.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace checks {

class Checklist {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }

  void exact(const catbox::Rational& got, const catbox::Rational& want, const std::string& what) {
    expect(got == want, what + ": got " + catbox::to_string(got) + ", want " + catbox::to_string(want));
  }

  // |got - want| <= tol, with an optional error half-width added to the gap.
  void near(double got, double want, double tol, const std::string& what, double halfwidth = 0) {
    const double gap = std::abs(got - want) + halfwidth;
    char buf[160];
    std::snprintf(buf, sizeof buf, ": got %.9g, want %.9g, |diff| %.2e > %.1e", got, want, gap, tol);
    expect(gap <= tol, what + buf);
  }

  void near(const catbox::Quantity& q, double want, double tol, const std::string& what) {
    near(catbox::to_double(q.midpoint()), want, tol, what, catbox::to_double(q.halfwidth()));
  }

  void fail(const std::string& what) { expect(false, what); }

  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }
  bool ok() const { return failures_.empty() && count_ > 0; }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

}  // namespace checks

#endif  // CATBOX_TESTS_CHECKLIST_HPP
