#include "liecheck/cli.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liecheck/checkpoint.hpp"
#include "liecheck/errors.hpp"
#include "liecheck/pencil.hpp"
#include "liecheck/report.hpp"
#include "liecheck/selftest.hpp"
#include "liecheck/spin.hpp"
#include "liecheck/usmall.hpp"

namespace liecheck {

namespace {

// Boxes larger than this need --long.
constexpr std::uint64_t kLongRunPoints = 500'000'000;

struct CaseArgs {
  std::string name;
  std::optional<int> n;
};

void add_case_args(CLI::App* cmd, CaseArgs& a) {
  cmd->add_option("case", a.name, "case name (see list-cases)")->required();
  cmd->add_option("--n", a.n, "rank parameter for the classical families");
}

CaseData load_case(const CaseArgs& a) { return build_case(make_case_id(a.name, a.n)); }

std::string labels_str(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "]";
}

std::string ktype_str(const KType& mu) {
  std::string s = "[";
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s + "]";
}

Json vector_json(const RationalVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json case_json(const CaseData& c) {
  Json j;
  j["case"] = c.id.str();
  j["k_has_center"] = c.k_has_center;
  j["coordinates"] = c.coord_names;
  Json g = Json::array(), k = Json::array(), p = Json::array();
  for (std::size_t i = 0; i < c.g_restricted.rank(); ++i) g.push_back(vector_json(c.g_restricted.simple_root(i)));
  for (std::size_t i = 0; i < c.k_system.rank(); ++i) k.push_back(vector_json(c.k_system.simple_root(i)));
  for (const auto& r : c.p_positive) p.push_back(vector_json(r));
  j["g_simple_roots"] = g;
  j["k_simple_roots"] = k;
  j["p_positive_roots"] = p;
  Json betas = Json::array();
  for (const auto& b : c.betas) betas.push_back(vector_json(b));
  j["beta"] = betas;
  j["rho"] = vector_json(c.rho);
  j["rho_c"] = vector_json(c.rho_c);
  Json variants = Json::array();
  for (std::size_t i = 0; i < c.s(); ++i) {
    Json v;
    v["w"] = c.w1[i].str();
    v["rho_n"] = vector_json(c.rho_n_variants[i]);
    variants.push_back(v);
  }
  j["w1"] = variants;
  j["w1_size"] = c.s();
  return j;
}

KType parse_mu(const std::string& text) {
  KType mu;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (item.empty() || pos != item.size()) throw UsageError("bad k-type coordinate '" + item + "'");
    mu.push_back(v);
  }
  if (mu.empty()) throw UsageError("empty k-type");
  return mu;
}

void emit_report(const std::string& path, const std::string& case_name, const std::string& command, Json params,
                 Json results, std::int64_t elapsed_ms) {
  if (path.empty()) return;
  RunReport r;
  r.case_name = case_name;
  r.command = command;
  r.parameters = std::move(params);
  r.results = std::move(results);
  r.elapsed_ms = elapsed_ms;
  write_report(path, r);
}

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of spin norms, u-small k-types and Vogan pencils for real forms", "liecheck"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto* list = app.add_subcommand("list-cases", "list the registered cases");

  auto* case_cmd = app.add_subcommand("case", "case data");
  case_cmd->require_subcommand(1);
  CaseArgs show_args;
  std::string show_report;
  auto* show = case_cmd->add_subcommand("show", "print the full data sheet of a case");
  add_case_args(show, show_args);
  show->add_option("--report", show_report, "write a structured report");

  auto* usmall_cmd = app.add_subcommand("usmall", "unitarily small k-types");
  usmall_cmd->require_subcommand(1);
  CaseArgs count_args;
  unsigned count_jobs = 1;
  std::string count_report;
  auto* count = usmall_cmd->add_subcommand("count", "count u-small k-types");
  add_case_args(count, count_args);
  count->add_option("--jobs", count_jobs, "worker threads")->check(CLI::PositiveNumber);
  count->add_option("--report", count_report, "write a structured report");
  CaseArgs dump_args;
  std::string dump_out, dump_format = "csv";
  auto* dump = usmall_cmd->add_subcommand("dump", "write every u-small k-type with its spin norm");
  add_case_args(dump, dump_args);
  dump->add_option("--out", dump_out, "output file")->required();
  dump->add_option("--format", dump_format, "csv or jsonl");

  CaseArgs spin_args;
  std::string spin_mu, spin_report;
  auto* spin = app.add_subcommand("spin-norm", "squared spin norm of a k-type");
  add_case_args(spin, spin_args);
  spin->add_option("--mu", spin_mu, "k-type coordinates, comma separated")->required();
  spin->add_option("--report", spin_report, "write a structured report");

  CaseArgs w1_args;
  bool w1_words = false;
  std::string w1_report;
  auto* w1 = app.add_subcommand("w1", "minimal coset representatives W(g)^1");
  add_case_args(w1, w1_args);
  w1->add_flag("--words", w1_words, "also list the elements");
  w1->add_option("--report", w1_report, "write a structured report");

  CaseArgs bounds_args;
  std::string bounds_report;
  auto* bounds = app.add_subcommand("bounds", "naive and parabolic lower bounds for term I");
  add_case_args(bounds, bounds_args);
  bounds->add_option("--report", bounds_report, "write a structured report");

  CaseArgs verify_args;
  std::string verify_box_text = "default", verify_report;
  unsigned verify_jobs = 1;
  bool verify_long = false, verify_no_shortcut = false, verify_exact = false;
  std::uint64_t verify_checkpoint_every = 100'000'000;
  auto* verify = app.add_subcommand("verify", "check the pencil step margin over a box");
  add_case_args(verify, verify_args);
  verify->add_option("--box", verify_box_text, "\"default\" or a:lo..hi,b:lo..hi,...");
  verify->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--long", verify_long, "allow long runs; enables resumable checkpoints");
  verify->add_flag("--no-shortcut", verify_no_shortcut, "evaluate every variant exactly");
  verify->add_flag("--exact", verify_exact, "use the rational engine instead of the integer one");
  verify->add_option("--checkpoint-every", verify_checkpoint_every, "points between checkpoint writes")
      ->check(CLI::PositiveNumber);
  verify->add_option("--report", verify_report, "write a structured report");

  auto* sp4r = app.add_subcommand("sp4r", "Sp(4,R) data");
  sp4r->require_subcommand(1);
  long long m_max = 20, m_min = 0;
  auto* pencils = sp4r->add_subcommand("pencils", "spin norms along the two closed-form families");
  pencils->add_option("--m-max", m_max, "largest m")->required();
  pencils->add_option("--m-min", m_min, "smallest m (default: family threshold)");

  bool self_long = false;
  unsigned self_jobs = 1;
  std::string self_report;
  auto* self = app.add_subcommand("selftest", "recompute every bundled reference value");
  self->add_flag("--long", self_long, "include the long counts and verification boxes");
  self->add_option("--jobs", self_jobs, "worker threads")->check(CLI::PositiveNumber);
  self->add_option("--report", self_report, "write a structured report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    if (*list) {
      out << std::left << std::setw(8) << "case" << std::setw(12) << "parameter" << std::setw(6) << "rank"
          << "k center\n";
      for (const auto& d : list_cases()) {
        out << std::setw(8) << d.name << std::setw(12) << (d.parametrized ? "n>=" + std::to_string(*d.min_n) : "-")
            << std::setw(6) << (d.rank ? std::to_string(*d.rank) : "n") << (d.k_has_center ? "yes" : "no") << "\n";
      }
      return kExitOk;
    }

    if (*show) {
      CaseData c = load_case(show_args);
      out << case_sheet(c);
      emit_report(show_report, c.id.str(), "case show", Json::object(), case_json(c), ms_since(t0));
      return kExitOk;
    }

    if (*count) {
      CaseData c = load_case(count_args);
      EnumerateOptions eo;
      eo.jobs = count_jobs;
      std::uint64_t n = count_usmall(c, eo);
      out << n << "\n";
      Json res;
      res["count"] = n;
      emit_report(count_report, c.id.str(), "usmall count", Json{{"jobs", count_jobs}}, res, ms_since(t0));
      return kExitOk;
    }

    if (*dump) {
      CaseData c = load_case(dump_args);
      std::uint64_t n = write_usmall_dump(c, dump_out, parse_dump_format(dump_format));
      out << "wrote " << n << " k-types to " << dump_out << "\n";
      return kExitOk;
    }

    if (*spin) {
      CaseData c = load_case(spin_args);
      KType mu = parse_mu(spin_mu);
      Rational v = spin_norm_sq(c, mu);
      auto arg = spin_argmin(c, mu);
      out << "spin_norm_sq " << to_string(v) << "\n";
      out << "spin_norm " << sqrt_decimal(v, 6) << "\n";
      out << "argmin";
      for (auto j : arg) out << ' ' << j;
      out << "\n";
      Json res;
      res["mu"] = mu;
      res["spin_norm_sq"] = to_string(v);
      res["argmin"] = arg;
      emit_report(spin_report, c.id.str(), "spin-norm", Json{{"mu", mu}}, res, ms_since(t0));
      return kExitOk;
    }

    if (*w1) {
      CaseData c = load_case(w1_args);
      out << c.s() << "\n";
      Json words = Json::array();
      for (const auto& w : c.w1) words.push_back(w.str());
      if (w1_words) {
        for (std::size_t j = 0; j < c.s(); ++j) out << "  j=" << j << "  " << c.w1[j].str() << "\n";
      }
      Json res;
      res["size"] = c.s();
      res["elements"] = words;
      emit_report(w1_report, c.id.str(), "w1", Json::object(), res, ms_since(t0));
      return kExitOk;
    }

    if (*bounds) {
      CaseData c = load_case(bounds_args);
      Rational naive = naive_bound(c);
      auto table = parabolic_bounds(c);
      out << "naive " << to_string(naive) << "\n";
      for (std::size_t k = 0; k < table.size(); ++k) out << "k=" << k + 1 << " " << to_string(table[k]) << "\n";
      Json res;
      res["naive"] = to_string(naive);
      Json t = Json::array();
      for (const auto& x : table) t.push_back(to_string(x));
      res["parabolic"] = t;
      emit_report(bounds_report, c.id.str(), "bounds", Json::object(), res, ms_since(t0));
      return kExitOk;
    }

    if (*verify) {
      CaseData c = load_case(verify_args);
      Box box;
      bool sanity = false;
      if (verify_box_text == "default") {
        DefaultBox d = default_box(c);
        box = d.box;
        sanity = d.sanity_only;
      } else {
        box = parse_box(c, verify_box_text);
      }
      std::string box_text = box.str(c.coord_names);
      if (box.size() > kLongRunPoints && !verify_long) {
        err << "box " << box_text << " has " << box.size() << " points; pass --long to run it\n";
        return kExitUsage;
      }
      VerifyOptions vo;
      vo.jobs = verify_jobs;
      vo.shortcut = !verify_no_shortcut;
      vo.engine = verify_exact ? Engine::Exact : Engine::Auto;
      vo.checkpoint_every = verify_checkpoint_every;
      if (verify_long) {
        vo.checkpoint = checkpoint_path(c.id.str(), box_text, vo.shortcut);
        err << "checkpoint file: " << vo.checkpoint.string() << "\n";
        std::size_t last_pct = 101;
        vo.progress = [&err, &last_pct](std::size_t done, std::size_t total, std::uint64_t scanned) {
          std::size_t pct = done * 100 / total;
          if (pct != last_pct) {
            err << "progress " << pct << "% (" << done << "/" << total << " units, " << scanned << " points)\n";
            last_pct = pct;
          }
        };
      }
      PencilReport rep = verify_box(c, box, vo);
      out << "case " << rep.case_name << "\n";
      out << "box " << rep.box_text << (sanity ? " (sanity range)" : "") << "\n";
      out << "scanned " << rep.scanned << "\n";
      out << "filtered " << rep.filtered << "\n";
      out << "violations " << rep.violation_count << "\n";
      for (const auto& v : rep.violations) out << "  " << ktype_str(v) << "\n";
      out << "min_margin_sq " << (rep.min_margin_sq ? to_string(*rep.min_margin_sq) : "none") << "\n";
      out << "elapsed_ms " << rep.elapsed_ms << "\n";
      if (rep.resumed) out << "resumed from checkpoint\n";
      out << (rep.verified() ? "verified" : "VIOLATION") << "\n";
      Json params;
      params["box"] = rep.box_text;
      params["jobs"] = verify_jobs;
      params["shortcut"] = vo.shortcut;
      emit_report(verify_report, c.id.str(), "verify", params, to_json(rep), ms_since(t0));
      return rep.verified() ? kExitOk : kExitFailure;
    }

    if (*pencils) {
      const Json& fams = golden().at("sp4r_families");
      bool all_match = true;
      for (Sp4rFamily f : {Sp4rFamily::Descending, Sp4rFamily::Ascending}) {
        std::string name = sp4r_family_name(f);
        const Json& quad = fams.at(name).at("quadratics");
        long long lo = std::max(m_min, sp4r_threshold(f));
        out << name << " family (m >= " << sp4r_threshold(f) << "): m  mu  good  middle  bad\n";
        for (long long m = lo; m <= m_max; ++m) {
          Sp4rTriple t = sp4r_family(m, f);
          std::vector<Rational> printed;
          for (const auto& q : quad) {
            printed.emplace_back(static_cast<long>(q.at(0).get<long>() * m * m + q.at(1).get<long>() * m + q.at(2).get<long>()));
          }
          std::vector<Rational> have = {t.good, t.middle, t.bad};
          out << "  " << m << "  " << ktype_str(t.mu) << "  " << to_string(t.good) << "  " << to_string(t.middle)
              << "  " << to_string(t.bad);
          if (have != printed) {
            out << "  (printed quadratics give " << labels_str(printed) << ")";
            all_match = false;
          }
          out << "\n";
        }
      }
      return all_match ? kExitOk : kExitFailure;
    }

    if (*self) {
      SelftestOptions so;
      so.long_run = self_long;
      so.jobs = self_jobs;
      so.on_item = [&out](const SelftestItem& it) {
        out << (it.passed ? "PASS " : "FAIL ") << it.name;
        if (it.passed) {
          out << "  " << it.expected << "\n";
        } else {
          out << "\n    expected: " << it.expected << "\n    computed: " << it.computed << "\n";
        }
      };
      SelftestResult r = run_selftest(so);
      auto fails = r.failures();
      out << r.items.size() - fails.size() << "/" << r.items.size() << " items passed\n";
      Json items = Json::array();
      for (const auto& it : r.items) {
        items.push_back({{"name", it.name}, {"expected", it.expected}, {"computed", it.computed}, {"passed", it.passed}});
      }
      emit_report(self_report, "", "selftest", Json{{"long", self_long}}, Json{{"items", items}}, ms_since(t0));
      return fails.empty() ? kExitOk : kExitFailure;
    }
  } catch (const UnknownCaseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnknownCase;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace liecheck
