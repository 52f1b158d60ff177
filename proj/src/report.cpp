#include "ybe/report.hpp"

#include <sstream>

namespace ybe {

std::string diff_witness(const SparseMat& a, const SparseMat& b) {
  auto d = a.first_diff(b);
  if (!d) return "";
  const auto& [r, c, va, vb] = *d;
  if (r < 0) return "shape mismatch";
  std::ostringstream os;
  os << "entry (" << r << "," << c << "): lhs=" << va.str() << " rhs=" << vb.str();
  return os.str();
}

void check_equal(Report& rep, const std::string& name, const SparseMat& a, const SparseMat& b) {
  if (a == b) {
    rep.add(name, true);
  } else {
    rep.add(name, false, diff_witness(a, b));
  }
}

}  // namespace ybe
