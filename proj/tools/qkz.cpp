#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qkz/algebra/errors.hpp"
#include "qkz/algebra/io.hpp"
#include "qkz/cli/appendix.hpp"
#include "qkz/combinatorics/quiver.hpp"
#include "qkz/psi/checks.hpp"
#include "qkz/rmatrix/rcheck.hpp"
#include "qkz/slice/slice.hpp"

using namespace qkz;
using cli::Report;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string format = "text";
  std::string out;
  std::optional<std::string> data;
  std::uint64_t seed = 20240601;
  bool timing = false;
  unsigned threads = 1;
  // instance
  int k = 0;
  std::vector<int> lambda, m, ell;
  int a = 1, b = 1;
  // verification
  std::string check;
  std::string in, partner, small;
  std::size_t r = 0, p = 0;
  bool deform = false;
  std::string part = "full";
  std::string perturb;
};

void write(const RunConfig &cfg, const std::string &text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f)
    throw PreconditionError("cannot write " + cfg.out);
  f << text;
}

json read_json(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw PreconditionError("cannot read " + path);
  return json::parse(f);
}

// Reports as text lines or a JSON document; returns the exit code.
int emit_reports(const RunConfig &cfg, const std::vector<Report> &reports) {
  bool ok = true;
  for (const auto &r : reports)
    ok = ok && r.status != "fail";
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto &r : reports) {
      json j = cli::to_json(r);
      if (!cfg.timing)
        j.erase("seconds");
      arr.push_back(j);
    }
    write(cfg, json{{"schema", 1}, {"reports", arr}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto &r : reports) {
      std::string status = r.status;
      for (auto &c : status)
        c = char(std::toupper(static_cast<unsigned char>(c)));
      os << status << "  " << r.check << "  [" << r.instance << "]";
      if (!r.witness.empty())
        os << "  " << r.witness;
      if (cfg.timing)
        os << "  (" << r.seconds << " s)";
      os << "\n";
    }
    write(cfg, os.str());
  }
  return ok ? 0 : 1;
}

Report timed(const std::string &instance, const std::function<rmatrix::CheckResult()> &fn) {
  auto t0 = std::chrono::steady_clock::now();
  Report r{"", instance, "fail", "", 0};
  auto res = fn();
  r.check = res.check;
  r.status = res.pass ? "pass" : "fail";
  r.witness = res.witness;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<int> ones(std::size_t n) { return std::vector<int>(n, 1); }

bool homogeneous(const std::vector<int> &m) {
  return std::adjacent_find(m.begin(), m.end(), std::not_equal_to<>()) == m.end();
}

// ---- psi ----

int cmd_psi_build(const RunConfig &cfg) {
  int M = 0;
  for (int x : cfg.lambda)
    M += x;
  std::vector<int> m = cfg.m.empty() ? ones(std::size_t(M)) : cfg.m;
  auto q = combinatorics::weights_from_lambda(cfg.k, cfg.lambda, m);
  if (M > 10)
    throw PreconditionError("M <= 10 for the fundamental build");
  auto psi1 = psi::build_psi_fundamental(cfg.k, cfg.lambda);
  auto v = cfg.m.empty() ? psi1 : psi::fuse_psi(psi1, m);
  if (cfg.format == "json") {
    json j = psi::to_json(v);
    j["instance"] = q.fingerprint();
    write(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "# " << q.fingerprint() << ", " << v.size() << " labels, " << v.nonzero_count()
       << " nonzero\n";
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v.entries[i].is_zero())
        os << v.label(i) << " : " << algebra::to_text(v.entries[i], v.vars) << "\n";
    write(cfg, os.str());
  }
  return 0;
}

int cmd_psi_verify(const RunConfig &cfg) {
  auto v = psi::psi_from_json(read_json(cfg.in));
  auto q = combinatorics::weights_from_lambda(v.k, v.lambda, v.m);
  const std::string inst = q.fingerprint();
  std::vector<Report> reports;
  std::optional<rmatrix::StandardFamily> fam;
  if (!v.is_component_basis())
    fam.emplace(v.k, v.lambda);
  auto need_family = [&] {
    if (!fam)
      throw PreconditionError("this check needs a standard-basis vector");
  };
  const std::string &c = cfg.check;
  if (c == "exchange") {
    need_family();
    std::optional<psi::PsiVector> other;
    if (!cfg.partner.empty())
      other = psi::psi_from_json(read_json(cfg.partner));
    for (std::size_t s = 0; s + 1 < v.m.size(); ++s) {
      if (v.m[s] == v.m[s + 1]) {
        reports.push_back(timed(inst, [&] { return psi::check_exchange(v, *fam, s); }));
      } else if (other) {
        reports.push_back(timed(inst, [&] { return psi::check_exchange(v, *other, *fam, s); }));
      } else {
        reports.push_back({"exchange slot " + std::to_string(s + 1), inst, "skipped",
                           "mixed m needs --partner", 0});
      }
    }
  } else if (c == "wheel") {
    std::size_t r = cfg.r;
    if (r == 0) {
      // fewest consecutive slots whose sizes exceed k
      int sum = 0;
      for (r = 0; r < v.m.size() && sum <= v.k; ++r)
        sum += *std::max_element(v.m.begin(), v.m.end());
    }
    for (const auto &res : psi::check_wheel_all(v, r))
      reports.push_back({res.check, inst, res.pass ? "pass" : "fail", res.witness, 0});
  } else if (c == "degree") {
    reports.push_back(timed(inst, [&] { return psi::check_degree(v); }));
  } else if (c == "cyclicity" || c == "qkz") {
    if (!homogeneous(v.m))
      throw PreconditionError("cyclicity and qKZ are run for homogeneous m only");
    auto rho = psi::rho_for(v, v);
    if (c == "cyclicity") {
      reports.push_back(timed(inst, [&] { return psi::check_cyclicity(v, v, rho); }));
    } else {
      need_family();
      for (std::size_t i = 0; i < v.m.size(); ++i)
        reports.push_back(timed(inst, [&] { return psi::qkz_step(v, *fam, rho, i); }));
    }
  } else if (c == "recurrence") {
    if (cfg.small.empty())
      throw PreconditionError("recurrence needs --small");
    auto s = psi::psi_from_json(read_json(cfg.small));
    reports.push_back(timed(inst, [&] { return psi::check_recurrence(v, s, cfg.p); }));
  } else {
    throw PreconditionError("unknown check '" + c + "'");
  }
  return emit_reports(cfg, reports);
}

// ---- rmat ----

json rf_to_json(const rmatrix::ROperator &r) {
  const auto &vs = rmatrix::spectral_context();
  auto label = [](const rmatrix::SubsetPair &p) {
    return json{{"first", p.first}, {"second", p.second}};
  };
  json src = json::array(), tgt = json::array(), entries = json::array();
  for (const auto &s : r.source)
    src.push_back(label(s));
  for (const auto &t : r.target)
    tgt.push_back(label(t));
  for (std::size_t i = 0; i < r.target.size(); ++i)
    for (const auto &[j, x] : r.matrix.row(i))
      entries.push_back({{"row", i}, {"col", j}, {"value", algebra::to_json(x, vs)}});
  return {{"schema", 1}, {"k", r.k}, {"a", r.a}, {"b", r.b}, {"variable", "z = z1 - z2"},
          {"source", src}, {"target", tgt}, {"entries", entries}};
}

int cmd_rmat_show(const RunConfig &cfg) {
  auto r = cfg.a == 1 && cfg.b == 1 ? rmatrix::fundamental_rcheck(cfg.k)
                                    : rmatrix::fused_rcheck(cfg.k, cfg.a, cfg.b);
  if (cfg.format == "json") {
    write(cfg, rf_to_json(r).dump(2) + "\n");
    return 0;
  }
  const auto &vs = rmatrix::spectral_context();
  std::ostringstream os;
  os << "# R(z), z = z1 - z2, k=" << r.k << ", a=" << r.a << ", b=" << r.b
     << ", rows: target labels, columns: source labels, hb = hbar\n";
  for (std::size_t i = 0; i < r.target.size(); ++i) {
    for (std::size_t j = 0; j < r.source.size(); ++j)
      os << (j ? " & " : "  ") << algebra::to_text(r.matrix.get(i, j), vs);
    os << " \\\\\n";
  }
  std::string text = os.str();
  write(cfg, text);
  return 0;
}

int cmd_rmat_verify(const RunConfig &cfg) {
  rmatrix::StandardFamily fam(cfg.k, std::nullopt);
  std::vector<int> m = cfg.m.empty() ? std::vector<int>{1, 1, 1, 1} : cfg.m;
  const std::string inst = "k=" + std::to_string(cfg.k) + " m=" + [&] {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i)
      s += (i ? "," : "") + std::to_string(m[i]);
    return s;
  }();
  std::vector<Report> reports;
  for (const auto &res : rmatrix::verify_relations(fam, m)) {
    const bool wanted = cfg.check == "all" || res.check.rfind(cfg.check, 0) == 0;
    if (wanted)
      reports.push_back({res.check, inst, res.pass ? "pass" : "fail", res.witness, 0});
  }
  if (reports.empty())
    throw PreconditionError("no relation named '" + cfg.check + "' applies to this m");
  return emit_reports(cfg, reports);
}

// ---- slice ----

int cmd_slice_emit(const RunConfig &cfg) {
  int L = 0;
  for (int x : cfg.ell)
    L = std::max(L, x);
  auto base = slice::build_slice(cfg.m, cfg.deform ? L : 0);
  auto model = cfg.part == "n"   ? slice::intersect_with_n(base)
               : cfg.part == "b" ? slice::intersect_with_b(base)
                                 : base;
  if (cfg.part != "full" && cfg.part != "n" && cfg.part != "b")
    throw PreconditionError("--part is one of full, n, b");
  auto eqs = cfg.deform ? slice::emit_deformed_equations(model, cfg.ell)
                        : slice::emit_equations(model, cfg.ell);
  const auto &wv = model.weight_vars();
  if (cfg.format == "json") {
    json coords = json::array(), rels = json::array();
    for (std::size_t q = 0; q < model.coords().size(); ++q)
      coords.push_back({{"name", model.coords()[q].name},
                        {"block", {model.coords()[q].i + 1, model.coords()[q].j + 1}},
                        {"column", model.coords()[q].c},
                        {"weight", algebra::to_text(model.weight(q), wv)}});
    for (const auto &r : eqs.relations)
      rels.push_back({{"name", r.name}, {"poly", algebra::to_text(r.poly, model.vars())}});
    write(cfg, json{{"schema", 1}, {"m", cfg.m}, {"ell", cfg.ell}, {"deformed", cfg.deform},
                    {"coordinates", coords}, {"relations", rels}}
                       .dump(2) +
                   "\n");
    return 0;
  }
  std::ostringstream os;
  os << "# " << model.coords().size() << " coordinates, " << eqs.relations.size()
     << " relations\n";
  for (std::size_t q = 0; q < model.coords().size(); ++q)
    os << "# " << model.coords()[q].name << " : " << algebra::to_text(model.weight(q), wv)
       << "\n";
  for (const auto &r : eqs.relations)
    os << r.name << " = " << algebra::to_text(r.poly, model.vars()) << "\n";
  write(cfg, os.str());
  return 0;
}

cli::AppendixFixture fixture(const RunConfig &cfg) {
  auto dir = cli::data_dir(cfg.data ? std::optional<std::filesystem::path>(*cfg.data) : std::nullopt);
  return cli::load_appendix(dir / "appendix");
}

int cmd_slice_verify_appendix(const RunConfig &cfg) {
  auto fx = fixture(cfg);
  const std::string inst = "appendix k=4 m=2,2,2,2";
  std::vector<Report> reports{
      timed(inst, [&] { return cli::check_appendix_equations(fx); }),
      timed(inst, [&] { return cli::check_appendix_deformed(fx); }),
      timed(inst, [&] { return cli::check_appendix_components(fx); }),
      timed(inst, [&] { return cli::check_appendix_multidegrees(fx); }),
      timed(inst, [&] { return cli::check_appendix_labels(fx, cfg.seed); })};
  return emit_reports(cfg, reports);
}

int cmd_appendix_suite(const RunConfig &cfg) {
  auto fx = fixture(cfg);
  if (!cfg.perturb.empty())
    fx = cli::perturb_fixture(fx, cfg.perturb);
  return emit_reports(cfg, cli::run_appendix_suite(fx));
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"qKZ solutions, R-matrices and transverse slices"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  if (const char *t = std::getenv("QKZ_THREADS"); t && *t) {
    try {
      int n = std::stoi(t);
      if (n < 1)
        throw std::invalid_argument("");
      cfg.threads = unsigned(n);
    } catch (const std::exception &) {
      std::cerr << "QKZ_THREADS must be a positive integer\n";
      return 2;
    }
  }
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out, "Output file (default stdout)");
  app.add_option("--data", cfg.data, "Fixture directory (default $QKZ_DATA_DIR or the source tree)");
  app.add_option("--seed", cfg.seed, "Seed for sampling");
  app.add_flag("--timing", cfg.timing, "Include wall times in reports");

  auto *psi = app.add_subcommand("psi", "Build or verify Psi vectors");
  psi->require_subcommand(1);
  auto *pb = psi->add_subcommand("build", "Build Psi (fundamental, or fused with --m)");
  pb->add_option("--k", cfg.k, "Rank")->required();
  pb->add_option("--lambda", cfg.lambda, "Weight")->delimiter(',')->required();
  pb->add_option("--m", cfg.m, "Column heights")->delimiter(',');
  auto *pv = psi->add_subcommand("verify", "Run a check on a serialized Psi");
  pv->add_option("--check", cfg.check, "Check")
      ->required()
      ->check(CLI::IsMember({"exchange", "wheel", "degree", "cyclicity", "qkz", "recurrence"}));
  pv->add_option("--in", cfg.in, "Psi JSON")->required();
  pv->add_option("--partner", cfg.partner, "Psi JSON for m with a pair swapped");
  pv->add_option("--small", cfg.small, "Smaller Psi JSON for the recurrence");
  pv->add_option("--p", cfg.p, "Insertion slot (0-based) for the recurrence");
  pv->add_option("--r", cfg.r, "Number of wheel positions");

  auto *rmat = app.add_subcommand("rmat", "R-matrices");
  rmat->require_subcommand(1);
  auto *rs = rmat->add_subcommand("show", "Print a fused R-matrix");
  rs->add_option("--k", cfg.k)->required();
  rs->add_option("--a", cfg.a);
  rs->add_option("--b", cfg.b);
  auto *rv = rmat->add_subcommand("verify", "YBE, unitarity and commutation");
  rv->add_option("--check", cfg.check)
      ->default_val("all")
      ->check(CLI::IsMember({"all", "ybe", "unitarity", "comm"}));
  rv->add_option("--k", cfg.k)->required();
  rv->add_option("--m", cfg.m)->delimiter(',');

  auto *sl = app.add_subcommand("slice", "Transverse slice");
  sl->require_subcommand(1);
  auto *se = sl->add_subcommand("emit", "Orbit-closure equations on the slice");
  se->add_option("--m", cfg.m)->delimiter(',')->required();
  se->add_option("--ell", cfg.ell)->delimiter(',')->required();
  se->add_flag("--deform", cfg.deform, "Regular-orbit deformation");
  se->add_option("--part", cfg.part, "full, n (strict upper) or b (upper)");
  auto *sv = sl->add_subcommand("verify-appendix", "Slice checks of the worked example");

  auto *ap = app.add_subcommand("appendix", "Worked example");
  ap->require_subcommand(1);
  auto *as = ap->add_subcommand("suite", "All checks of the worked example");
  as->add_option("--perturb", cfg.perturb, "Alter one fixture item (negative control)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (pb->parsed())
      return cmd_psi_build(cfg);
    if (pv->parsed())
      return cmd_psi_verify(cfg);
    if (rs->parsed())
      return cmd_rmat_show(cfg);
    if (rv->parsed())
      return cmd_rmat_verify(cfg);
    if (se->parsed())
      return cmd_slice_emit(cfg);
    if (sv->parsed())
      return cmd_slice_verify_appendix(cfg);
    if (as->parsed())
      return cmd_appendix_suite(cfg);
  } catch (const PreconditionError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
