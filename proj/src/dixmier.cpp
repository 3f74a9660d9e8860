#include "filiform/dixmier.hpp"

#include <map>
#include <memory>
#include <tuple>

#include "filiform/cohomology.hpp"
#include "filiform/explicit_cocycles.hpp"

namespace filiform {

IdealSplit make_split(const GradedAlgebra& parent, int x, int bound) {
  if (!parent.generators().contains(x))
    throw Error(ErrorCode::InvalidParameter, "e" + std::to_string(x) + " is not a generator of " + parent.name());
  auto ideal = subalgebra(parent, parent.generators().without(x), bound);
  // b is an ideal exactly when e_x is not a bracket
  for (int i = 1; 2 * i < x; ++i) {
    if (sgn(parent.structure_constant(i, x - i, x)) != 0)
      throw Error(ErrorCode::NotClosed, "e" + std::to_string(x) + " lies in the derived algebra");
  }
  return {parent, ideal.renamed(parent.name() + "|b"), x};
}

IdealSplit m0_split() { return make_split(m0(), 1); }
IdealSplit m2_split() { return make_split(m2(), 2); }

std::pair<Cochain, Cochain> split_form(const IdealSplit& split, const Cochain& f) {
  Cochain prime(f.field()), rest(f.field());
  for (const auto& [m, coeff] : f.terms()) {
    auto it = std::find(m.begin(), m.end(), split.x);
    if (it == m.end()) {
      rest.add_term(m, coeff);
      continue;
    }
    // moving e^x to the front passes every smaller index
    Monomial without(m.begin(), it);
    without.insert(without.end(), it + 1, m.end());
    prime.add_term(without, (it - m.begin()) % 2 == 0 ? coeff : -coeff);
  }
  return {prime, rest};
}

Cochain restrict_to_ideal(const IdealSplit& split, const Cochain& f) { return split_form(split, f).second; }

Cochain adx_star(const IdealSplit& split, const Cochain& c) {
  const auto& parent = split.parent;
  const auto& ideal = split.ideal.generators();
  int x = split.x;
  return Derivation([&](int k) {
    std::vector<std::pair<int, mpq_class>> images;
    if (!ideal.contains(k)) return images;
    int j = k - x;
    if (j >= 1 && ideal.contains(j)) {
      mpq_class c = parent.structure_constant(x, j, k);
      if (sgn(c) != 0) images.emplace_back(j, c);
    }
    return images;
  })(c);
}

bool contraction_identity_check(const IdealSplit& split, const Cochain& f) {
  auto [f_x, rest] = split_form(split, f);
  if (!f_x.is_zero())
    throw Error(ErrorCode::InvalidParameter, "contraction identity is stated for forms over the ideal");
  auto lhs = split_form(split, differential(split.parent, f)).first;
  auto rhs = adx_star(split, f) + differential(split.ideal, f_x);
  return lhs == rhs;
}

namespace {

class CellCache {
 public:
  CellCache(const IdealSplit& split, const Field& field) : split_(split), field_(field) {}

  const CohomologyCell& parent(int q, int k) { return get(true, q, k); }
  const CohomologyCell& ideal(int q, int k) { return get(false, q, k); }

 private:
  const CohomologyCell& get(bool parent, int q, int k) {
    auto key = std::make_tuple(parent, q, k);
    auto it = cells_.find(key);
    if (it == cells_.end())
      it = cells_.emplace(key, std::make_unique<CohomologyCell>(parent ? split_.parent : split_.ideal, q, k, field_)).first;
    return *it->second;
  }

  const IdealSplit& split_;
  Field field_;
  std::map<std::tuple<bool, int, int>, std::unique_ptr<CohomologyCell>> cells_;
};

// Matrix of a map between cohomology cells: column j = coordinates of image of rep j.
SparseMatrix map_matrix(const CohomologyCell& from, const CohomologyCell& to, const Field& field,
                        const std::function<Cochain(const Cochain&)>& f) {
  SparseMatrix m(field, to.dim(), from.dim());
  if (from.dim() == 0 || to.dim() == 0) return m;
  std::vector<Cochain> images;
  for (const auto& rep : from.representatives()) images.push_back(f(rep));
  auto coords = to.coordinates(images);
  for (std::size_t j = 0; j < coords.size(); ++j)
    for (std::size_t i = 0; i < coords[j].size(); ++i)
      if (!coords[j][i].is_zero()) m.add(i, j, coords[j][i]);
  return m;
}

// Images of maps into an empty cell are still checked for landing in ker d.
bool lands_in_zero(const CohomologyCell& from, const CohomologyCell& to,
                   const std::function<Cochain(const Cochain&)>& f) {
  if (to.dim() != 0 || from.dim() == 0) return true;
  std::vector<Cochain> images;
  for (const auto& rep : from.representatives()) images.push_back(f(rep));
  to.coordinates(images);  // throws if an image is not closed
  return true;
}

}  // namespace

std::optional<ExactnessNode> ExactnessReport::first_failure() const {
  for (const auto& n : nodes)
    if (!n.pass()) return n;
  return std::nullopt;
}

const ExactnessNode& ExactnessReport::node(int q, int k) const {
  for (const auto& n : nodes)
    if (n.q == q && n.k == k) return n;
  throw Error(ErrorCode::InvalidParameter, "node (" + std::to_string(q) + "," + std::to_string(k) + ") not in report");
}

nlohmann::json ExactnessReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& n : nodes) {
    rows.push_back({{"q", n.q},
                    {"k", n.k},
                    {"g", {n.dim_g - n.rank_r, n.rank_w_in, n.dim_g}},
                    {"b", {n.dim_b - n.rank_a, n.rank_r, n.dim_b}},
                    {"b_shift", {n.dim_b_shift - n.rank_w_out, n.rank_a, n.dim_b_shift}},
                    {"composites_zero", n.composites_zero},
                    {"pass", n.pass()}});
  }
  nlohmann::json out = {{"parent", parent}, {"ideal", ideal}, {"x", x},     {"qmax", qmax},
                        {"kmax", kmax},     {"pass", pass()}, {"nodes", rows}};
  if (auto f = first_failure()) out["first_failure"] = {{"q", f->q}, {"k", f->k}};
  return out;
}

ExactnessReport verify_exactness(const IdealSplit& split, int qmax, int kmax, const Field& field) {
  ExactnessReport report{split.parent.name(), split.ideal.name(), split.x, qmax, kmax, {}};
  CellCache cells(split, field);
  int x = split.x;
  auto w = [&](const Cochain& c) { return wedge(Cochain::monomial(field, {x}), c); };
  auto r = [&](const Cochain& c) { return restrict_to_ideal(split, c); };
  auto a = [&](const Cochain& c) { return adx_star(split, c); };

  for (int q = 0; q <= qmax; ++q) {
    for (int k = 0; k <= kmax; ++k) {
      const auto& g = cells.parent(q, k);
      const auto& b = cells.ideal(q, k);
      const auto& b_shift = cells.ideal(q, k - x);
      const auto& g_next = cells.parent(q + 1, k);

      ExactnessNode node;
      node.q = q;
      node.k = k;
      node.dim_g = g.dim();
      node.dim_b = b.dim();
      node.dim_b_shift = b_shift.dim();

      auto mr = map_matrix(g, b, field, r);
      auto ma = map_matrix(b, b_shift, field, a);
      auto mw_out = map_matrix(b_shift, g_next, field, w);
      node.rank_r = rank(mr);
      node.rank_a = rank(ma);
      node.rank_w_out = rank(mw_out);
      bool ok = (ma * mr).is_zero() && (mw_out * ma).is_zero();
      if (q > 0) {
        const auto& b_prev = cells.ideal(q - 1, k - x);
        auto mw_in = map_matrix(b_prev, g, field, w);
        node.rank_w_in = rank(mw_in);
        ok = ok && (mr * mw_in).is_zero();
      }
      ok = ok && lands_in_zero(g, b, r) && lands_in_zero(b, b_shift, a) && lands_in_zero(b_shift, g_next, w);
      node.composites_zero = ok;
      report.nodes.push_back(node);
    }
  }
  return report;
}

}  // namespace filiform
