#include "filiform/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "filiform/algebra.hpp"
#include "filiform/cohomology.hpp"
#include "filiform/combinatorics.hpp"
#include "filiform/explicit_cocycles.hpp"
#include "filiform/sl2.hpp"
#include "filiform/verify.hpp"

namespace filiform {

namespace {

constexpr int kPass = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

GradedAlgebra load_algebra(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return load_custom_file(spec.substr(5));
  return preset(PresetSpec::parse(spec));
}

void require(const std::optional<int>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::InvalidParameter, std::string(flag) + " is required");
}

void require_nonnegative(const std::optional<int>& v, const char* flag) {
  if (v && *v < 0) throw Error(ErrorCode::InvalidParameter, std::string(flag) + " must be >= 0");
}

std::string render_cochains(const std::vector<Cochain>& list, OutputFormat format,
                            const std::function<std::string(const Cochain&)>& text) {
  if (format == OutputFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : list) arr.push_back({{"text", text(c)}, {"terms", to_json(c)}});
    return arr.dump(2) + "\n";
  }
  if (format == OutputFormat::Csv) throw Error(ErrorCode::InvalidParameter, "csv output is only available for tables");
  std::string out;
  for (const auto& c : list) out += text(c) + "\n";
  return out;
}

int cmd_betti(const RunConfig& cfg, std::string& text) {
  auto alg = load_algebra(cfg.algebra);
  auto field = Field::parse(cfg.field);
  if (cfg.q || cfg.k) {
    require(cfg.q, "--q");
    require(cfg.k, "--k");
    auto dim = betti(alg, *cfg.q, *cfg.k, field);
    switch (cfg.format) {
      case OutputFormat::Json:
        text = nlohmann::json{{"algebra", alg.name()}, {"field", field.to_string()}, {"q", *cfg.q}, {"k", *cfg.k}, {"dim", dim}}.dump(2) + "\n";
        break;
      case OutputFormat::Csv:
        text = "q,k,dim\n" + std::to_string(*cfg.q) + "," + std::to_string(*cfg.k) + "," + std::to_string(dim) + "\n";
        break;
      case OutputFormat::Text:
        text = std::to_string(dim) + "\n";
        break;
    }
    return kPass;
  }
  auto table = betti_table(alg, cfg.qmax.value_or(4), cfg.kmax.value_or(20), field);
  switch (cfg.format) {
    case OutputFormat::Json: text = table.to_json().dump(2) + "\n"; break;
    case OutputFormat::Csv: text = table.to_csv(); break;
    case OutputFormat::Text: text = table.to_text(); break;
  }
  return kPass;
}

int cmd_cocycle(const RunConfig& cfg, std::string& text) {
  auto field = Field::parse(cfg.field);
  std::vector<Cochain> list;
  if (cfg.omega && cfg.w) throw Error(ErrorCode::InvalidParameter, "--omega and --w are exclusive");
  if (cfg.omega) {
    list.push_back(omega(OmegaSpec::parse(*cfg.omega), field));
  } else if (cfg.w) {
    list.push_back(w_cocycle(OmegaSpec::parse(*cfg.w), field).form);
  } else {
    require(cfg.q, "--q (or --omega / --w)");
    require(cfg.k, "--k");
    list = representatives(load_algebra(cfg.algebra), *cfg.q, *cfg.k, field);
  }
  text = render_cochains(list, cfg.format, [](const Cochain& c) { return to_text(c); });
  return kPass;
}

int cmd_verify(const RunConfig& cfg, std::string& text) {
  SuiteOptions options{cfg.qmax, cfg.kmax, std::nullopt};
  if (cfg.field != "q") options.field = Field::parse(cfg.field);
  auto result = run_suite(cfg.suite, options);
  text = cfg.format == OutputFormat::Json ? result.to_json().dump(2) + "\n" : result.to_text() + "\n";
  return result.pass() ? kPass : kFailed;
}

int cmd_sl2(const RunConfig& cfg, std::string& text) {
  require(cfg.q, "--q");
  require(cfg.k, "--k");
  auto mod = cfg.n ? Sl2Module::finite(*cfg.n) : Sl2Module(mpq_class(Field::rationals().parse_scalar(cfg.lambda).rational()));
  auto basis = primitive_basis(mod, *cfg.q, *cfg.k);
  text = render_cochains(basis, cfg.format, primitive_text);
  return kPass;
}

int cmd_gf(const RunConfig& cfg, std::string& text) {
  int kmax = cfg.kmax.value_or(20);
  TruncatedSeries s(0);
  if (cfg.series == "euler") {
    s = euler_product(kmax);
  } else if (cfg.series == "pentagonal") {
    s = pentagonal_series(kmax);
  } else if (cfg.series == "betti") {
    GfAlgebra which;
    if (cfg.algebra == "m0")
      which = GfAlgebra::M0;
    else if (cfg.algebra == "m2")
      which = GfAlgebra::M2;
    else
      throw Error(ErrorCode::InvalidParameter, "generating functions are known for m0 and m2 only");
    s = betti_gf(which, kmax, cfg.qmax.value_or(4));
  } else {
    throw Error(ErrorCode::InvalidParameter, "unknown series \"" + cfg.series + "\"");
  }
  if (cfg.format == OutputFormat::Csv) {
    std::ostringstream os;
    os << "t,x,coeff\n";
    for (const auto& [e, c] : s.coefficients()) os << e.first << ',' << e.second << ',' << c << '\n';
    text = os.str();
  } else {
    text = cfg.format == OutputFormat::Json ? s.to_json().dump(2) + "\n" : s.to_text() + "\n";
  }
  return kPass;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string text;
  int status = kPass;
  try {
    for (auto [v, flag] : {std::pair{cfg.qmax, "--qmax"}, std::pair{cfg.kmax, "--kmax"}}) require_nonnegative(v, flag);
    if (cfg.command == "betti")
      status = cmd_betti(cfg, text);
    else if (cfg.command == "cocycle")
      status = cmd_cocycle(cfg, text);
    else if (cfg.command == "verify")
      status = cmd_verify(cfg, text);
    else if (cfg.command == "sl2")
      status = cmd_sl2(cfg, text);
    else if (cfg.command == "gf")
      status = cmd_gf(cfg, text);
    else
      throw Error(ErrorCode::InvalidParameter, "unknown command \"" + cfg.command + "\"");
  } catch (const Error& e) {
    err << nlohmann::json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) {
      err << nlohmann::json{{"error", "IOError"}, {"message", "cannot write " + *cfg.out}}.dump() << "\n";
      return kUsage;
    }
    file << text;
  } else {
    out << text;
  }
  return status;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of N-graded filiform Lie algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--algebra", cfg.algebra, "m0|m2|l1|lk:<k>|m0n:<n>|m2n:<n>|l1quot:<n>|file:<path>");
    sub->add_option("--field", cfg.field, "q or fp:<p>");
    sub->add_option("--q", cfg.q, "form degree");
    sub->add_option("--k", cfg.k, "weight");
    sub->add_option("--qmax", cfg.qmax, "largest degree");
    sub->add_option("--kmax", cfg.kmax, "largest weight");
    sub->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out, "write output to a file");
  };

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of one cell or a table");
  common(betti_cmd);
  auto* cocycle_cmd = app.add_subcommand("cocycle", "explicit cocycles or representatives");
  common(cocycle_cmd);
  cocycle_cmd->add_option("--omega", cfg.omega, "omega cocycle of m0, indices like 5,6");
  cocycle_cmd->add_option("--w", cfg.w, "w cocycle of m2, indices like 5");
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  common(verify_cmd);
  verify_cmd->add_option("suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  auto* sl2_cmd = app.add_subcommand("sl2", "primitive vectors of Lambda^q V(lambda)");
  common(sl2_cmd);
  sl2_cmd->add_option("--lambda", cfg.lambda, "highest weight (rational, not a nonnegative integer)");
  sl2_cmd->add_option("--n", cfg.n, "use the finite module V(n-2)");
  auto* gf_cmd = app.add_subcommand("gf", "truncated generating functions");
  common(gf_cmd);
  gf_cmd->add_option("--series", cfg.series, "betti|euler|pentagonal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << nlohmann::json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;
  return run(cfg, out, err);
}

}  // namespace filiform
