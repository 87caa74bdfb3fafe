#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "cli.hpp"
#include "lattika/cyclotomic.hpp"
#include "lattika/errors.hpp"
#include "lattika/lattice.hpp"
#include "lattika/sampling.hpp"
#include "lattika/switching.hpp"

namespace lattika::cli {

namespace {

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& label, const std::string& got, const std::string& want) {
    const bool ok = got == want;
    out_ << (ok ? "ok   " : "FAIL ") << label << ": " << got;
    if (!ok) out_ << " (expected " << want << ")";
    out_ << "\n";
    failures_ += ok ? 0 : 1;
  }

  void check(const std::string& label, bool ok, const std::string& detail) {
    out_ << (ok ? "ok   " : "FAIL ") << label << ": " << detail << "\n";
    failures_ += ok ? 0 : 1;
  }

  int code() const { return failures_ == 0 ? kOk : kVerifyFailed; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

template <typename Vec>
std::string show(const Vec& v) {
  std::ostringstream s;
  s << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s << (i ? "," : "") << v(i);
  s << ")";
  return s.str();
}

lattice::LatticeBasis int_basis(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const std::int64_t x : row) m(i, j++) = x;
    ++i;
  }
  return lattice::LatticeBasis(m);
}

int demo_lattice(std::ostream& out) {
  Report r(out);
  const auto b3 = int_basis({{2, 1, 3}, {1, 2, 0}, {2, -3, -5}});
  r.check("det of rows (2,1,3),(1,2,0),(2,-3,-5)", lattice::determinant(b3).to_string(), "36");

  const auto diag = int_basis({{3, 0}, {0, 2}});
  RationalVector w(2);
  w << 2, 3;
  r.check("(2,3) mod diag(3,2)", show(lattice::mod_basis(w, diag)), "(2,1)");

  const auto two = int_basis({{2, 0}, {0, 2}});
  r.check("dual basis of 2Z^2", show(lattice::dual_basis(two).matrix().reshaped()), "(1/2,0,0,1/2)");

  IntMatrix unimod(2, 2);
  unimod << 1, 1, 1, 2;
  r.check("((1,1),(1,2)) unimodular", lattice::is_unimodular(unimod) ? "yes" : "no", "yes");

  const auto korkine = int_basis({{2, 0, 0, 0, 0},
                                  {0, 2, 0, 0, 0},
                                  {0, 0, 2, 0, 0},
                                  {0, 0, 0, 2, 0},
                                  {1, 1, 1, 1, 1}});
  const auto minima = lattice::brute_successive_minima(korkine, 2);
  std::ostringstream lam;
  for (std::size_t i = 0; i < minima.size(); ++i) lam << (i ? "," : "") << minima[i];
  r.check("Korkine-style basis squared minima", lam.str(), "4,4,4,4,4");
  return r.code();
}

int demo_cyclotomic(std::ostream& out) {
  Report r(out);
  const char* table[] = {"x - 1",           "x + 1",   "x^2 + x + 1", "x^2 + 1",
                         "x^4 + x^3 + x^2 + x + 1", "x^2 - x + 1", "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1",
                         "x^4 + 1"};
  for (std::uint64_t n = 1; n <= 8; ++n) {
    r.check("Phi_" + std::to_string(n), cyclotomic_poly(n).to_string(), table[n - 1]);
  }
  std::ostringstream roots;
  for (const ZqInt& z : primitive_roots_mod(5, Modulus(11))) roots << (roots.tellp() ? "," : "") << z.canonical();
  r.check("primitive 5th roots mod 11", roots.str(), "3,4,5,9");

  std::ostringstream f11;
  for (const auto& f : factor_cyclotomic_mod(5, Modulus(11))) f11 << "(" << f.to_string() << ")";
  // x - 3, x - 4, x - 5, x - 9 with symmetric constants mod 11
  r.check("Phi_5 over F_11", f11.str(), "(x - 3)(x - 4)(x - 5)(x + 2)");

  const auto f3 = factor_cyclotomic_mod(5, Modulus(3));
  r.check("Phi_5 over F_3 irreducible", f3.size() == 1 && f3.front().degree() == 4,
          std::to_string(f3.size()) + " factor(s)");
  return r.code();
}

int demo_switching(std::ostream& out) {
  Report r(out);
  Coeffs x(2);
  x << 1, 3;
  r.check("BitDecomp_4(1,3)", show(switching::bit_decomp(x, 4)), "(1,1,0,1)");
  Coeffs y(2);
  y << 3, 2;
  r.check("PowersOfTwo_4(3,2)", show(switching::powers_of_two(y, 4)), "(3,2,2,0)");
  Coeffs c(2);
  c << 5, 6;
  r.check("Scale (5,6) from q=11 to p=5", show(switching::scale(c, 11, 5)), "(3,2)");
  return r.code();
}

int demo_gauss(std::ostream& out) {
  Report r(out);
  constexpr int kDraws = 100000;
  for (const double sigma : {1.0, 2.0}) {
    Rng rng(Seed::from_hex("6c617474696b612d67617573732d64656d6f2d736565642d3030303030303031"));
    const GaussianParams g(sigma);
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < kDraws; ++i) {
      const double z = static_cast<double>(sample_dgauss_int(g, rng));
      sum += z;
      sum2 += z * z;
    }
    const double mean = sum / kDraws;
    const double var = sum2 / kDraws - mean * mean;
    std::ostringstream d;
    d << std::fixed << std::setprecision(4) << "mean " << mean << ", variance " << var;
    const bool ok = std::abs(mean) <= 3.0 * sigma / std::sqrt(double(kDraws)) &&
                    std::abs(var - sigma * sigma) <= 0.05 * sigma * sigma;
    r.check("sigma " + std::to_string(sigma).substr(0, 3), ok, d.str());
  }
  return r.code();
}

}  // namespace

int run_demo(const std::string& topic, std::ostream& out) {
  if (topic == "lattice") return demo_lattice(out);
  if (topic == "cyclotomic") return demo_cyclotomic(out);
  if (topic == "switching") return demo_switching(out);
  if (topic == "gauss") return demo_gauss(out);
  throw InvalidParameter("unknown demo topic '" + topic + "' (lattice, cyclotomic, switching, gauss)");
}

}  // namespace lattika::cli
