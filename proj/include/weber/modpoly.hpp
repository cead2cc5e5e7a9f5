#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "weber/exactnum.hpp"
#include "weber/lines.hpp"
#include "weber/qseries.hpp"

namespace weber {

/// Sparse bivariate polynomial sum c_ij x^i y^j over Q(zeta_48). Zero
/// coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;

  void set(int i, int j, const CycloElt& c);
  void add(int i, int j, const CycloElt& c);
  CycloElt coeff(int i, int j) const;
  const std::map<Key, CycloElt>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  int degree_x() const;
  int degree_y() const;
  bool is_rational() const;

  BiPoly swapped() const;
  BiPoly scaled(const CycloElt& c) const;
  /// P(cx * x^a, cy * y^a).
  BiPoly substituted(const CycloElt& cx, const CycloElt& cy, int a = 1) const;
  /// Divide by the coefficient of the monomial with largest x-degree
  /// (smallest y-degree among those), making it 1.
  BiPoly normalized() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);

  /// Human-readable form, e.g. "x^6 - x^5*y^5 + 4*x*y + y^6".
  std::string pretty() const;

 private:
  std::map<Key, CycloElt> terms_;
};

struct GenerateOptions {
  bool use_sparsity = true;
  /// Extra equations beyond the estimated minimum; raised on ambiguity.
  long extra_equations = 48;
};

/// Modular polynomial of level ell on `line`, normalized by BiPoly::normalized().
/// Unobstructed ell uses the (ell+1, ell+1) degree box; for the descended
/// cases (t, 2), (x24, 2), (x24, 3) the smallest box admitting a relation is used.
BiPoly generate(const InvariantLine& line, int ell, const GenerateOptions& opts = {});

struct VerifyReport {
  bool vanishes = false;
  long precision = 0;                        // absolute precision checked, q^(1/48) units
  std::optional<long> first_nonzero_exponent;
  std::string first_nonzero_coeff;
};

/// Default precision for verify(): pole order of the largest monomial plus
/// 48 (ell+1)^2 / 24 + 96 steps.
long default_verify_precision(const InvariantLine& line, int ell, const BiPoly& poly);
VerifyReport verify(const BiPoly& poly, const InvariantLine& line, int ell, long prec = 0);

/// Every monomial satisfies i + ell*j = ell + 1 (mod 24).
bool check_sparsity(const BiPoly& poly, int ell);
/// P(zeta24 x, zeta24^ell y) == zeta24^(ell+1) P(x, y) exactly.
bool check_transform(const BiPoly& poly, int ell);
bool is_symmetric(const BiPoly& poly);

/// Printed reference polynomials: phi2_j, psi2, psi3, phi5, phi7, phi11, phi13.
BiPoly builtin(std::string_view name);
/// The name of the builtin for (line, ell) if there is one.
std::optional<std::string> builtin_name_for(const InvariantLine& line, int ell);

/// Text file format: "# line=<name> ell=<l> norm=monic-x" then "i j c" rows
/// sorted by (i, j).
std::string serialize(const BiPoly& poly, const std::string& line, int ell);
struct ParsedPoly {
  std::string line;
  int ell = 0;
  BiPoly poly;
};
/// Throws IOError on malformed input.
ParsedPoly parse_poly_file(std::string_view text);

/// Second argument series for the (line, ell) correspondence: the line
/// series with q -> q^ell.
QSeries correspondence_partner(const InvariantLine& line, int ell, const QSeries& base);

}  // namespace weber
