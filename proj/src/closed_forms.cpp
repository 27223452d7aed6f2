#include "treedep/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace treedep {

namespace {

void require_positive(std::int64_t value, const char* name) {
  if (value < 1) throw std::invalid_argument(std::string(name) + " must be >= 1");
}

}  // namespace

TreeCount tau_complete_bipartite(std::int64_t r, std::int64_t s) {
  require_positive(r, "r");
  require_positive(s, "s");
  return int_pow(BigInt(r), s - 1) * int_pow(BigInt(s), r - 1);
}

BigRat density_edge_transitive(std::int64_t n_vertices, std::int64_t m_edges) {
  require_positive(n_vertices, "vertex count");
  if (m_edges < n_vertices - 1)
    throw std::invalid_argument("edge-transitive density needs m >= n - 1");
  return make_rational(BigInt(n_vertices - 1), BigInt(m_edges));
}

TreeCount gd_tree_count(std::int64_t r, std::int64_t s, const SubtreeProfile& profile) {
  require_positive(r, "r");
  require_positive(s, "s");
  const auto m = profile.m;
  const auto n = profile.n;
  if (m < 0 || n < 0 || m > r || n > s)
    throw std::invalid_argument("subtree profile out of range");
  // Realizable profiles: a lone vertex on either side, or both sides occupied.
  if (m + n < 1 || (m + n >= 2 && (m == 0 || n == 0)))
    throw std::invalid_argument("subtree profile is not realizable");

  const BigRat coeff(BigInt(m) * s + BigInt(n) * r - BigInt(m) * n);
  const BigRat value = coeff * rat_pow(BigRat(r), s - n - 1) * rat_pow(BigRat(s), r - m - 1);
  return require_integer(value, "gd_tree_count");
}

TreeCount gd_matching_count(std::int64_t r, std::int64_t s, std::int64_t l) {
  require_positive(r, "r");
  require_positive(s, "s");
  if (l < 1 || l > std::min(r, s))
    throw std::invalid_argument("matching size out of range");

  const BigRat value = rat_pow(BigRat(r + s), l - 1) * BigRat(r + s - l) *
                       rat_pow(BigRat(r), s - l - 1) * rat_pow(BigRat(s), r - l - 1);
  return require_integer(value, "gd_matching_count");
}

TreeCount necklace_tau(const std::vector<NecklaceBlock>& blocks) {
  if (blocks.size() < 2)
    throw std::invalid_argument("a necklace needs at least 2 blocks");
  BigInt prod = 1;
  BigRat sum = 0;
  for (const auto& b : blocks) {
    if (b.tau < 1) throw std::invalid_argument("block tree count must be >= 1");
    if (b.key_density <= 0 || b.key_density > 1)
      throw std::invalid_argument("block key density must lie in (0, 1]");
    prod *= b.tau;
    sum += b.key_density;
  }
  return require_integer(BigRat(prod) * sum, "necklace_tau");
}

TreeCount necklace_tau_edge(const std::vector<NecklaceBlock>& blocks, std::size_t k,
                            const TreeCount& b_k, const BigRat& d_xy) {
  if (blocks.size() < 2)
    throw std::invalid_argument("a necklace needs at least 2 blocks");
  if (k >= blocks.size()) throw std::out_of_range("block index out of range");
  if (b_k < 0) throw std::invalid_argument("thicket count must be >= 0");
  if (d_xy <= 0 || d_xy > 1)
    throw std::invalid_argument("edge density must lie in (0, 1]");

  BigInt prod = 1;
  BigRat others = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    prod *= blocks[i].tau;
    if (i != k) others += blocks[i].key_density;
  }
  const BigRat bracket = make_rational(b_k, blocks[k].tau) + d_xy * others;
  return require_integer(BigRat(prod) * bracket, "necklace_tau_edge");
}

TreeCount bipartite_type_edge_tau(const std::vector<BipartiteBlockParams>& blocks,
                                  std::size_t k, EdgeClass cls) {
  if (blocks.size() < 2)
    throw std::invalid_argument("a necklace needs at least 2 blocks");
  if (k >= blocks.size()) throw std::out_of_range("block index out of range");
  if (cls == EdgeClass::Key)
    throw std::invalid_argument("key edges use the necklace key-edge formula");

  const auto rk = blocks[k].r;
  const auto sk = blocks[k].s;
  require_positive(rk, "r");
  require_positive(sk, "s");
  BigInt correction;
  switch (cls) {
    case EdgeClass::Type1AtU:
      // Edge x u with x on the Y side, so it exists only when s_k >= 2.
      if (sk < 2) throw std::invalid_argument("block has no type-1 edge at u");
      correction = int_pow(BigInt(rk - 1), 2);
      break;
    case EdgeClass::Type1AtV:
      if (rk < 2) throw std::invalid_argument("block has no type-1 edge at v");
      correction = int_pow(BigInt(sk - 1), 2);
      break;
    default:
      if (rk < 2 || sk < 2) throw std::invalid_argument("block has no type-2 edge");
      correction = 1;
      break;
  }

  BigInt prod = 1;
  BigRat sum = 0;
  for (const auto& b : blocks) {
    require_positive(b.r, "r");
    require_positive(b.s, "s");
    prod *= tau_complete_bipartite(b.r, b.s);
    sum += make_rational(BigInt(b.r + b.s - 1), BigInt(b.r) * b.s);
  }
  const BigRat d_k = make_rational(BigInt(rk + sk - 1), BigInt(rk) * sk);
  const BigRat bracket = d_k * sum - make_rational(correction, int_pow(BigInt(rk) * sk, 2));
  return require_integer(BigRat(prod) * bracket, "bipartite_type_edge_tau");
}

namespace {

BigInt theta_product(const std::vector<std::int64_t>& r_list) {
  if (r_list.size() < 2)
    throw std::invalid_argument("a theta graph needs at least 2 paths");
  BigInt prod = 1;
  for (auto r : r_list) {
    require_positive(r, "path length");
    prod *= r;
  }
  return prod;
}

}  // namespace

TreeCount theta_tau(const std::vector<std::int64_t>& r_list) {
  const BigInt prod = theta_product(r_list);
  BigRat sum = 0;
  for (auto r : r_list) sum += make_rational(BigInt(1), BigInt(r));
  return require_integer(BigRat(prod) * sum, "theta_tau");
}

TreeCount theta_tau_edge(const std::vector<std::int64_t>& r_list, std::size_t k) {
  const BigInt prod = theta_product(r_list);
  if (k >= r_list.size()) throw std::out_of_range("path index out of range");
  BigRat sum = 0;
  BigRat others = 0;
  for (std::size_t i = 0; i < r_list.size(); ++i) {
    const BigRat term = make_rational(BigInt(1), BigInt(r_list[i]));
    sum += term;
    if (i != k) others += term;
  }
  const BigRat bracket = sum - make_rational(BigInt(1), BigInt(r_list[k])) * others;
  return require_integer(BigRat(prod) * bracket, "theta_tau_edge");
}

HGadgetForms h_gadget_forms(std::int64_t r) {
  if (r < 0) throw std::invalid_argument("H_r needs r >= 0");
  HGadgetForms forms;
  if (r == 0) {
    forms.tau = 1;
    forms.key_density = 1;
    return forms;
  }
  forms.tau = int_pow(BigInt(2), r - 1) * (r + 2);
  forms.key_density = make_rational(BigInt(2), BigInt(r + 2));
  forms.nonkey_density = make_rational(BigInt(r + 3), BigInt(2) * (r + 2));
  forms.thicket_nonkey = int_pow(BigInt(2), r - 1);
  return forms;
}

}  // namespace treedep
