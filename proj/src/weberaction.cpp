#include "weber/weberaction.hpp"

#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "weber/error.hpp"

namespace weber {

CycMat3 CycMat3::identity() { return diag(1, 1, 1); }
CycMat3 CycMat3::scalar(const CycloElt& c) { return diag(c, c, c); }
CycMat3 CycMat3::diag(const CycloElt& a, const CycloElt& b, const CycloElt& c) {
  CycMat3 m;
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = c;
  return m;
}

CycMat3 CycMat3::operator*(const CycMat3& o) const {
  CycMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CycloElt acc;
      for (int k = 0; k < 3; ++k) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        acc += at(i, k) * o.at(k, j);
      }
      r.at(i, j) = acc;
    }
  return r;
}

CycMat3 CycMat3::pow(long k) const {
  CycMat3 r = identity(), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool CycMat3::is_monomial() const {
  for (int i = 0; i < 3; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < 3; ++j) {
      row += !at(i, j).is_zero();
      col += !at(j, i).is_zero();
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

bool CycMat3::is_diagonal() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

std::array<int, 3> CycMat3::permutation() const {
  std::array<int, 3> p{-1, -1, -1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!at(i, j).is_zero()) p[static_cast<std::size_t>(i)] = j;
  return p;
}

CycMat3 CycMat3::monomial_inverse() const {
  if (!is_monomial()) throw DomainError("matrix is not monomial");
  CycMat3 r;
  auto p = permutation();
  for (int i = 0; i < 3; ++i) r.at(p[static_cast<std::size_t>(i)], i) = at(i, p[static_cast<std::size_t>(i)]).inverse();
  return r;
}

std::string CycMat3::key() const {
  std::string s;
  for (const auto& x : e) {
    s += x.to_string();
    s += '|';
  }
  return s;
}

std::string CycMat3::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + at(i, j).to_string();
  }
  return s + "]";
}

CycMat3 iota_S() {
  CycMat3 m;
  m.at(0, 0) = 1;
  m.at(1, 2) = root_of_unity(8, -1);
  m.at(2, 1) = root_of_unity(8, 1);
  return m;
}

CycMat3 iota_T() {
  CycMat3 m;
  m.at(0, 1) = root_of_unity(24, 1);
  m.at(1, 0) = root_of_unity(24, -2);
  m.at(2, 2) = root_of_unity(24, 1);
  return m;
}

CycMat3 iota_word(std::string_view word) {
  static const CycMat3 S = iota_S(), T = iota_T(), s = S.monomial_inverse(), t = T.monomial_inverse();
  CycMat3 r = CycMat3::identity();
  for (char ch : word) {
    switch (ch) {
      case 'S': r = r * S; break;
      case 'T': r = r * T; break;
      case 's': r = r * s; break;
      case 't': r = r * t; break;
      default: throw DomainError(std::string("bad symbol '") + ch + "' in word");
    }
  }
  return r;
}

std::vector<CycMat3> group_closure_elements(std::size_t bound) {
  const std::array<CycMat3, 2> gens = {iota_S(), iota_T()};
  std::vector<CycMat3> elems{CycMat3::identity()};
  std::unordered_set<std::string> seen{elems[0].key()};
  // Finite group: closing under right multiplication by generators suffices.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      CycMat3 h = elems[i] * g;
      if (seen.insert(h.key()).second) {
        elems.push_back(h);
        if (elems.size() > bound) throw DivergenceError("group closure exceeded " + std::to_string(bound) + " elements");
      }
    }
  }
  return elems;
}

namespace {

int perm_index(const std::array<int, 3>& p) { return p[0] * 9 + p[1] * 3 + p[2]; }

std::array<int, 3> compose(const std::array<int, 3>& p, const std::array<int, 3>& q) {
  // Row i of AB has its nonzero entry in column q[p[i]].
  return {q[static_cast<std::size_t>(p[0])], q[static_cast<std::size_t>(p[1])], q[static_cast<std::size_t>(p[2])]};
}

std::set<std::string> generated_keys(const std::vector<CycMat3>& gens) {
  std::vector<CycMat3> elems{CycMat3::identity()};
  std::set<std::string> seen{elems[0].key()};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      CycMat3 h = elems[i] * g;
      if (seen.insert(h.key()).second) elems.push_back(h);
    }
  return seen;
}

}  // namespace

GroupReport group_report(std::size_t bound) {
  GroupReport r;
  auto G = group_closure_elements(bound);
  r.order_G = G.size();
  r.all_monomial = true;
  std::vector<CycMat3> D;
  std::set<int> image;
  for (const auto& g : G) {
    if (!g.is_monomial()) r.all_monomial = false;
    if (g.is_diagonal()) D.push_back(g);
    image.insert(perm_index(g.permutation()));
  }
  r.order_D = D.size();
  r.permutation_image = image.size();

  r.D_abelian = true;
  for (const auto& a : D)
    for (const auto& b : D)
      if (!(a * b == b * a)) r.D_abelian = false;

  std::set<std::string> dkeys;
  for (const auto& d : D) dkeys.insert(d.key());
  r.D_generated_by_T2_STS2 = generated_keys({iota_word("TT"), iota_word("STSSTS")}) == dkeys;

  // Homomorphism check on a deterministic sample of pairs.
  r.permutation_is_homomorphism = true;
  for (std::size_t i = 0; i < G.size(); i += 7)
    for (std::size_t j = 0; j < G.size(); j += 11) {
      auto lhs = (G[i] * G[j]).permutation();
      if (lhs != compose(G[i].permutation(), G[j].permutation())) r.permutation_is_homomorphism = false;
    }
  std::size_t kernel = 0;
  for (const auto& g : G)
    if (g.permutation() == std::array<int, 3>{0, 1, 2}) ++kernel;
  r.kernel_is_D = kernel == D.size() && r.order_G == 6 * r.order_D;

  auto perm_matrix = [](std::array<int, 3> p) {
    CycMat3 m;
    for (int i = 0; i < 3; ++i) m.at(i, p[static_cast<std::size_t>(i)]) = 1;
    return m;
  };
  // (u0,u1,u2) o U = (u2,u1,u0): row vector times matrix, so column j
  // picks u_i where M[i][j] = 1.
  r.U_V_W_permutations = iota_word("tST") == perm_matrix({2, 1, 0}) && iota_word("ttSTT") == perm_matrix({0, 2, 1}) &&
                         iota_word("STTT") == perm_matrix({1, 2, 0});

  r.S_squared_identity = iota_word("SS") == CycMat3::identity();
  CycMat3 st3 = iota_word("STSTST");
  r.ST_cubed_scalar = st3.is_diagonal() && st3.at(0, 0) == st3.at(1, 1) && st3.at(1, 1) == st3.at(2, 2);
  CycMat3 z3inv = CycMat3::scalar(root_of_unity(3, -1));
  r.T16_relation = iota_word("TT").pow(8) == z3inv && iota_word("STS").pow(16) == z3inv;
  return r;
}

SL2Mod SL2Mod::operator*(const SL2Mod& o) const {
  auto m = [&](long v) { return ((v % N) + N) % N; };
  return {m(a * o.a + b * o.c), m(a * o.b + b * o.d), m(c * o.a + d * o.c), m(c * o.b + d * o.d), N};
}

SL2Mod SL2Mod::inverse() const {
  auto m = [&](long v) { return ((v % N) + N) % N; };
  return {m(d), m(-b), m(-c), m(a), N};
}

SL2Report sl2_identity_check() {
  SL2Report r;
  auto word = [](long N) {
    SL2Mod S{0, N - 1, 1, 0, N}, T{1, 1, 0, 1, N};
    SL2Mod U = S * T * S.inverse();
    SL2Mod Ti = T.inverse(), Ui = U.inverse();
    return T * T * U * U * Ti * Ti * Ui * Ui;
  };
  r.commutator = word(16);
  r.commutator_squared = r.commutator * r.commutator;
  r.commutator_mod8 = word(8);
  r.matches = r.commutator == SL2Mod{13, 8, 8, 5, 16};
  r.square_matches = r.commutator_squared == SL2Mod{9, 0, 0, 9, 16};
  r.mod8_scalar = r.commutator_mod8 == SL2Mod{5, 0, 0, 5, 8};
  // U = S T S^-1 in the representation.
  CycMat3 m = iota_word("TTSTsSTsttStsSts");
  bool trivial = m.is_diagonal();
  for (int i = 0; i < 3 && trivial; ++i) trivial = m.at(i, i).pow(3) == CycloElt(1);
  r.acts_trivially_on_cubes = trivial;
  return r;
}

}  // namespace weber
