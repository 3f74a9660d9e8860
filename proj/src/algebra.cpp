#include "filiform/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "filiform/error.hpp"

namespace filiform {

IndexSet IndexSet::without(int index) const {
  auto excluded = excluded_;
  if (!contains(index)) return *this;
  excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), index), index);
  return IndexSet(min_, max_, std::move(excluded));
}

IndexSet IndexSet::truncated(int max) const {
  int cap = max_ ? std::min(*max_, max) : max;
  std::vector<int> excluded;
  for (int e : excluded_)
    if (e <= cap) excluded.push_back(e);
  return IndexSet(min_, cap, std::move(excluded));
}

bool IndexSet::contains(int i) const {
  if (i < min_ || (max_ && i > *max_)) return false;
  return !std::binary_search(excluded_.begin(), excluded_.end(), i);
}

std::vector<int> IndexSet::elements_upto(int bound) const {
  std::vector<int> out;
  int hi = max_ ? std::min(*max_, bound) : bound;
  for (int i = min_; i <= hi; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::size_t IndexSet::size() const {
  if (!max_) throw Error(ErrorCode::InvalidParameter, "size of an infinite index set");
  return elements_upto(*max_).size();
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  auto shown = elements_upto(max_ ? *max_ : min_ + static_cast<int>(excluded_.size()) + 2);
  for (std::size_t n = 0; n < shown.size(); ++n) os << (n ? "," : "") << shown[n];
  if (!max_) os << ",...";
  os << '}';
  return os.str();
}

std::optional<std::size_t> GradedAlgebra::dimension() const {
  if (!generators_.finite()) return std::nullopt;
  return generators_.size();
}

Bracket GradedAlgebra::bracket(int i, int j) const {
  Bracket out;
  if (!generators_.contains(i) || !generators_.contains(j)) return out;
  for (auto& term : rule_(i, j))
    if (sgn(term.coeff) != 0 && generators_.contains(term.index)) out.push_back(std::move(term));
  return out;
}

mpq_class GradedAlgebra::structure_constant(int i, int j, int k) const {
  mpq_class c = 0;
  for (const auto& term : bracket(i, j))
    if (term.index == k) c += term.coeff;
  return c;
}

// ---------------------------------------------------------------- presets

namespace {

Bracket single(long coeff, int index) { return {BracketTerm{mpq_class(coeff), index}}; }

Bracket m0_rule(int i, int j) {
  if (i == 1 && j >= 2) return single(1, j + 1);
  if (j == 1 && i >= 2) return single(-1, i + 1);
  return {};
}

Bracket m2_rule(int i, int j) {
  if (i == j) return {};
  if (i > j) {
    auto b = m2_rule(j, i);
    for (auto& t : b) t.coeff = -t.coeff;
    return b;
  }
  if (i == 1) return single(1, j + 1);
  if (i == 2 && j >= 3) return single(1, j + 2);
  return {};
}

Bracket witt_rule(int i, int j) {
  if (i == j) return {};
  return single(j - i, i + j);
}

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(ErrorCode::InvalidParameter, "expected an integer, got \"" + std::string(text) + "\"");
  return value;
}

void require_n(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "quotient dimension n must be >= 2, got " + std::to_string(n));
}

}  // namespace

PresetSpec PresetSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  auto head = text.substr(0, colon);
  auto param = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto need_param = [&](PresetKind kind) {
    if (param.empty()) throw Error(ErrorCode::InvalidParameter, std::string(head) + " needs a parameter");
    return PresetSpec{kind, parse_int(param)};
  };
  auto no_param = [&](PresetKind kind) {
    if (colon != std::string_view::npos) throw Error(ErrorCode::InvalidParameter, std::string(head) + " takes no parameter");
    return PresetSpec{kind, 0};
  };
  if (head == "m0") return no_param(PresetKind::M0);
  if (head == "m2") return no_param(PresetKind::M2);
  if (head == "l1") return no_param(PresetKind::L1);
  if (head == "lk") return need_param(PresetKind::Lk);
  if (head == "m0n") return need_param(PresetKind::M0n);
  if (head == "m2n") return need_param(PresetKind::M2n);
  if (head == "l1quot") return need_param(PresetKind::L1Quot);
  throw Error(ErrorCode::InvalidParameter, "unknown algebra \"" + std::string(text) + "\"");
}

GradedAlgebra m0() { return {"m0", IndexSet::from(1), m0_rule}; }
GradedAlgebra m2() { return {"m2", IndexSet::from(1), m2_rule}; }

GradedAlgebra witt_positive(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "L_k needs k >= 1");
  return {"L" + std::to_string(k), IndexSet::from(k), witt_rule};
}

GradedAlgebra m0_quotient(int n) {
  require_n(n);
  return {"m0(" + std::to_string(n) + ")", IndexSet::range(1, n), m0_rule};
}

GradedAlgebra m2_quotient(int n) {
  require_n(n);
  return {"m2(" + std::to_string(n) + ")", IndexSet::range(1, n), m2_rule};
}

GradedAlgebra l1_quotient(int n) {
  require_n(n);
  return {"L1/L" + std::to_string(n + 1), IndexSet::range(1, n), witt_rule};
}

GradedAlgebra preset(const PresetSpec& spec) {
  switch (spec.kind) {
    case PresetKind::M0: return m0();
    case PresetKind::M2: return m2();
    case PresetKind::L1: return witt_positive(1);
    case PresetKind::Lk: return witt_positive(spec.param);
    case PresetKind::M0n: return m0_quotient(spec.param);
    case PresetKind::M2n: return m2_quotient(spec.param);
    case PresetKind::L1Quot: return l1_quotient(spec.param);
  }
  throw Error(ErrorCode::InvalidParameter, "unknown preset");
}

// ------------------------------------------------------------- validation

namespace {

using Vec = std::map<int, mpq_class>;

Vec to_vec(const Bracket& b) {
  Vec v;
  for (const auto& t : b) v[t.index] += t.coeff;
  std::erase_if(v, [](const auto& kv) { return sgn(kv.second) == 0; });
  return v;
}

void add_scaled(Vec& acc, const Vec& v, const mpq_class& scale) {
  for (const auto& [k, c] : v) acc[k] += scale * c;
}

// [x, e_l] for x a combination of generators.
Vec bracket_with(const GradedAlgebra& alg, const Vec& x, int l) {
  Vec out;
  for (const auto& [k, c] : x) add_scaled(out, to_vec(alg.bracket(k, l)), c);
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

std::string describe(const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    os << (first ? "" : " + ") << c.get_str() << "*e" << k;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

ValidationReport validate(const GradedAlgebra& alg, int bound) {
  if (bound < 3) throw Error(ErrorCode::InvalidParameter, "validation bound must be >= 3");
  ValidationReport report;
  const auto& gens = alg.generators();
  auto idx = gens.elements_upto(bound);

  for (int i : idx) {
    for (int j : idx) {
      if (i + j > bound) break;
      auto raw = to_vec(alg.raw_bracket(i, j));
      if (i == j && !raw.empty())
        report.violations.push_back({"antisymmetry", i, j, 0, "[e_i,e_i] = " + describe(raw)});
      if (i < j) {
        auto back = to_vec(alg.raw_bracket(j, i));
        Vec sum = raw;
        add_scaled(sum, back, 1);
        std::erase_if(sum, [](const auto& kv) { return sgn(kv.second) == 0; });
        if (!sum.empty())
          report.violations.push_back(
              {"antisymmetry", i, j, 0, "[e_i,e_j] = " + describe(raw) + " but [e_j,e_i] = " + describe(back)});
      }
      for (const auto& [k, c] : raw) {
        if (k != i + j)
          report.violations.push_back({"grading", i, j, 0, "output index " + std::to_string(k) + " != i + j"});
        else if (!gens.contains(k) && !(gens.max() && k > *gens.max()))
          report.violations.push_back({"closure", i, j, 0, "output e" + std::to_string(k) + " is not a generator"});
      }
    }
  }

  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      for (std::size_t c = b + 1; c < idx.size(); ++c) {
        int i = idx[a], j = idx[b], l = idx[c];
        if (i + j + l > bound) break;
        Vec total;
        add_scaled(total, bracket_with(alg, to_vec(alg.bracket(i, j)), l), 1);
        add_scaled(total, bracket_with(alg, to_vec(alg.bracket(j, l)), i), 1);
        add_scaled(total, bracket_with(alg, to_vec(alg.bracket(l, i)), j), 1);
        std::erase_if(total, [](const auto& kv) { return sgn(kv.second) == 0; });
        if (!total.empty()) report.violations.push_back({"jacobi", i, j, l, "Jacobiator = " + describe(total)});
      }
    }
  }
  return report;
}

GradedAlgebra subalgebra(const GradedAlgebra& alg, const IndexSet& indices, int bound) {
  IndexSet gens = indices;
  if (alg.truncation()) gens = gens.truncated(*alg.truncation());
  int limit = gens.finite() ? 2 * *gens.max() : bound;
  auto idx = gens.elements_upto(limit);
  for (int i : idx) {
    for (int j : idx) {
      if (i + j > limit) break;
      for (const auto& t : alg.bracket(i, j))
        if (!gens.contains(t.index))
          throw Error(ErrorCode::NotClosed, "[e" + std::to_string(i) + ",e" + std::to_string(j) + "] has a component on e" +
                                                std::to_string(t.index) + " outside " + gens.to_string());
    }
  }
  return alg.with_generators(gens).renamed(alg.name() + "|" + gens.to_string());
}

bool same_brackets(const GradedAlgebra& a, const GradedAlgebra& b, int bound) {
  if (!(a.generators() == b.generators())) return false;
  auto idx = a.generators().elements_upto(bound);
  for (int i : idx)
    for (int j : idx) {
      if (i + j > bound) break;
      if (to_vec(a.bracket(i, j)) != to_vec(b.bracket(i, j))) return false;
    }
  return true;
}

int nilindex(const GradedAlgebra& alg) {
  if (!alg.truncation()) throw Error(ErrorCode::InvalidParameter, "nilindex needs a finite algebra");
  auto gens = alg.generators().elements_upto(*alg.truncation());
  std::set<int> current(gens.begin(), gens.end());
  int length = 0;
  while (!current.empty()) {
    ++length;
    std::set<int> next;
    for (int a : gens)
      for (int b : current)
        for (const auto& t : alg.bracket(a, b)) next.insert(t.index);
    current = std::move(next);
  }
  return length;
}

// ----------------------------------------------------------- custom JSON

GradedAlgebra load_custom(const nlohmann::json& document) {
  std::string name;
  int n = 0;
  std::map<std::pair<int, int>, Bracket> table;
  try {
    name = document.at("name").get<std::string>();
    n = document.at("truncation").get<int>();
    for (const auto& entry : document.at("brackets")) {
      int i = entry.at("i").get<int>();
      int j = entry.at("j").get<int>();
      Bracket terms;
      for (const auto& t : entry.at("terms")) {
        long num = t.at("num").get<long>();
        long den = t.contains("den") ? t.at("den").get<long>() : 1;
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in bracket term");
        mpq_class c(num, den);
        c.canonicalize();
        terms.push_back({c, t.at("k").get<int>()});
      }
      if (table.contains({i, j})) throw Error(ErrorCode::ParseError, "bracket (" + std::to_string(i) + "," + std::to_string(j) + ") listed twice");
      table[{i, j}] = std::move(terms);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (n < 1) throw Error(ErrorCode::ValidationFailed, "truncation must be a positive integer");
  for (const auto& [key, terms] : table)
    if (key.first < 1 || key.first > n || key.second < 1 || key.second > n)
      throw Error(ErrorCode::ValidationFailed, "bracket (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                                   ") references an index outside 1.." + std::to_string(n));

  auto rule = [table = std::move(table)](int i, int j) -> Bracket {
    if (auto it = table.find({i, j}); it != table.end()) return it->second;
    if (auto it = table.find({j, i}); it != table.end()) {
      Bracket neg = it->second;
      for (auto& t : neg) t.coeff = -t.coeff;
      return neg;
    }
    return {};
  };
  GradedAlgebra alg(name, IndexSet::range(1, n), rule);
  int bound = document.contains("bound") ? document.at("bound").get<int>() : std::max(3, n);
  auto report = validate(alg, std::max(3, bound));
  if (!report.pass()) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::ValidationFailed, v.kind + " violation at (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                                                 (v.l ? "," + std::to_string(v.l) : "") + "): " + v.detail);
  }
  return alg;
}

GradedAlgebra load_custom_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return load_custom(doc);
}

GradedAlgebra load_custom_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_custom_text(buffer.str());
}

nlohmann::json to_json(const GradedAlgebra& alg) {
  if (!alg.truncation()) throw Error(ErrorCode::InvalidParameter, "only finite algebras serialize");
  int n = *alg.truncation();
  nlohmann::json brackets = nlohmann::json::array();
  for (int i : alg.generators().elements_upto(n))
    for (int j : alg.generators().elements_upto(n)) {
      if (j <= i) continue;
      auto b = alg.bracket(i, j);
      if (b.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : b)
        terms.push_back({{"num", t.coeff.get_num().get_si()}, {"den", t.coeff.get_den().get_si()}, {"k", t.index}});
      brackets.push_back({{"i", i}, {"j", j}, {"terms", terms}});
    }
  return {{"name", alg.name()}, {"truncation", n}, {"brackets", brackets}};
}

}  // namespace filiform
