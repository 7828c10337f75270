#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "recipart/builtin_tables.hpp"
#include "recipart/cert_store.hpp"
#include "recipart/errors.hpp"
#include "recipart/nm.hpp"
#include "recipart/prover.hpp"
#include "recipart/search.hpp"
#include "recipart/spectrum.hpp"
#include "recipart/suggest.hpp"

namespace recipart::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct SpecFlags {
  std::vector<std::uint64_t> m_free;
  std::string primes;
  std::string forbid;
  std::uint64_t min_part = 1;
  std::optional<std::uint64_t> max_part;
  std::string residue;
};

struct Common {
  bool json = false;
  std::size_t jobs = 0;
  std::optional<std::uint64_t> max_nodes;
};

std::vector<std::uint64_t> split_ints(const std::string& text, const char* flag) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::InvalidSpec, std::string("bad integer '") + item + "' in " + flag);
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

std::vector<Rational> split_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (!item.empty()) out.push_back(Rational::parse(item));
  }
  return out;
}

ConstraintSpec to_spec(const SpecFlags& f) {
  ConstraintSpec s;
  s.m_free = f.m_free;
  if (!f.primes.empty()) s.allowed_primes = split_ints(f.primes, "--primes");
  s.forbidden = split_ints(f.forbid, "--forbid");
  s.min_part = f.min_part;
  s.max_part = f.max_part;
  return s.normalized();
}

std::optional<ResidueFilter> to_filter(const SpecFlags& f) {
  if (f.residue.empty()) return std::nullopt;
  const auto colon = f.residue.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidSpec, "--residue expects r:m");
  const auto r = split_ints(f.residue.substr(0, colon), "--residue");
  const auto m = split_ints(f.residue.substr(colon + 1), "--residue");
  if (r.size() != 1 || m.size() != 1 || m[0] == 0) throw Error(ErrorCode::InvalidSpec, "--residue expects r:m");
  return ResidueFilter{m[0], r[0] % m[0]};
}

void add_spec_flags(CLI::App* app, SpecFlags& f) {
  app->add_option("--m-free", f.m_free, "no part divisible by M (repeatable)")->check(CLI::Range(2ULL, ~0ULL));
  app->add_option("--primes", f.primes, "allowed primes, e.g. 2,3,5");
  app->add_option("--forbid", f.forbid, "forbidden parts, e.g. 1,39");
  app->add_option("--min-part", f.min_part, "smallest allowed part");
  app->add_option("--max-part", f.max_part, "largest allowed part");
}

void add_common(CLI::App* app, Common& c) {
  app->add_flag("--json", c.json, "JSON output");
  app->add_option("--jobs", c.jobs, "worker threads (0 = all cores)");
  app->add_option("--max-nodes", c.max_nodes, "search node cap per n");
}

std::string braces(const PartitionSet& s) { return "{" + s.str() + "}"; }

std::string braces(const std::vector<Rational>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + "}";
}

json rats(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& r : v) a.push_back(r.str());
  return a;
}

fs::path cert_path(const std::string& p) {
  fs::path path(p);
  if (path.is_relative()) {
    if (const char* root = std::getenv("RECIPART_CERT_DIR"); root && *root) return fs::path(root) / path;
  }
  return path;
}

std::optional<fs::path> cert_root() {
  if (const char* root = std::getenv("RECIPART_CERT_DIR"); root && *root) return fs::path(root);
  return std::nullopt;
}

json range_json(const RangeReport& r) {
  json j = {{"lo", r.lo}, {"hi", r.hi}, {"failures", r.failures}, {"unknown", r.unknown},
            {"witnesses", r.witnesses.size()}, {"holds", r.holds()}};
  if (r.residue_filter) j["residue"] = {{"modulus", r.residue_filter->modulus}, {"residue", r.residue_filter->residue}};
  return j;
}

int range_exit(const RangeReport& r) {
  if (!r.failures.empty()) return kRefuted;
  if (!r.unknown.empty()) return kUnknown;
  return kOk;
}

void print_range(std::ostream& out, const std::string& label, const RangeReport& r) {
  out << label << " [" << r.lo << ", " << r.hi << "]";
  if (r.residue_filter) out << " n = " << r.residue_filter->residue << " mod " << r.residue_filter->modulus;
  out << ": " << r.witnesses.size() << " witnessed, " << r.failures.size() << " failures, " << r.unknown.size()
      << " unknown\n";
  const auto list = [&](const char* name, const std::vector<std::uint64_t>& v) {
    if (v.empty()) return;
    out << "  " << name << ":";
    for (std::size_t i = 0; i < v.size() && i < 20; ++i) out << ' ' << v[i];
    if (v.size() > 20) out << " ...";
    out << '\n';
  };
  list("failures", r.failures);
  list("unknown", r.unknown);
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExhausted:
    case ErrorCode::MissingBaseCertificate:
      return kUnknown;
    case ErrorCode::DuplicatePart:
    case ErrorCode::NonPositive:
    case ErrorCode::InvalidSpec:
    case ErrorCode::InvalidRational:
    case ErrorCode::NonInvertibleDenominator:
    case ErrorCode::UnknownName:
    case ErrorCode::BelowThreshold:
    case ErrorCode::CongruenceViolation:
    case ErrorCode::NotASubset:
      return kUsage;
    default:
      return kRefuted;
  }
}

// ---- repro recipes ---------------------------------------------------------

struct Recipe {
  const char* name;
  const char* what;
  bool long_running;
};

constexpr Recipe kRecipes[] = {
    {"graham", "{2,3,6} for n=11 and the Graham Q-table base window [78, 333]", false},
    {"unique91", "the unique 1-partition of 91", false},
    {"b100", "|B(100,136)| = 4314 and the growth table for 65..100", false},
    {"s3", "{2,3}-full base window [814, 1638] for S_3 minus {2}", false},
    {"odd15-sub", "odd 7-smooth 1-partitions for n = 1 mod 8 in [3609, 6000]", false},
    {"twofive-sub", "{2,5}-full 1-partitions for n = 1 mod 3 in [3634, 5000]", false},
    {"odd15-full", "odd15 base window [3609, 67098] with a manifest", true},
    {"twofive-full", "S_5 base window [6482, 12992] (n = alpha mod 3) with manifests", true},
};

int run_recipe(const std::string& name, const Common& c, std::ostream& out) {
  RangeOptions ro;
  ro.jobs = c.jobs;
  ro.budget.max_nodes = c.max_nodes;
  BaseWindowOptions bo;
  bo.jobs = c.jobs;
  const SearchProvider search(ro.budget);

  const auto report_window = [&](const TableCollection& tables, std::uint64_t X, const std::string& manifest_stem) {
    const BaseWindowReport w = check_base_window(tables, X, search, bo);
    out << tables.name << " X=" << X << " window=" << w.window << '\n';
    int code = kOk;
    for (const auto& [alpha, r] : w.per_alpha) {
      print_range(out, "  alpha=" + alpha.str(), r);
      code = std::max(code, range_exit(r));
      if (!manifest_stem.empty()) {
        std::string file = manifest_stem + "-" + alpha.str() + ".json";
        std::replace(file.begin(), file.end(), '/', '_');
        write_certificate(make_range_cert(alpha, tables.Q(), r), cert_path(file));
      }
    }
    out << (w.holds() ? "holds\n" : "does not hold\n");
    return code;
  };

  if (name == "graham") {
    const auto set = find_one(11, Rational(1), {});
    out << "find n=11 alpha=1: " << (set ? braces(*set) : "none") << '\n';
    const int code = report_window(builtin_tables("graham-q"), 78, "");
    return set && set->str() == "2,3,6" ? code : kRefuted;
  }
  if (name == "unique91") {
    const auto all = enumerate(91, Rational(1), {});
    for (const auto& s : all) out << braces(s) << '\n';
    return all.size() == 1 && all[0].str() == "3,4,6,11,12,22,33" ? kOk : kRefuted;
  }
  if (name == "b100") {
    const WindowSweep sweep = sweep_windows(65, 100, 136, c.jobs);
    const auto rows = growth_table(sweep);
    out << growth_csv(rows);
    out << "|B(100,136)| = " << sweep.at(100).size() << '\n';
    return sweep.at(100).size() == 4314 ? kOk : kRefuted;
  }
  if (name == "s3") {
    bo.skip = {Rational(2)};
    return report_window(builtin_tables("sp(3)"), 814, "");
  }
  if (name == "odd15-sub" || name == "twofive-sub") {
    const bool odd = name == "odd15-sub";
    ConstraintSpec spec;
    spec.allowed_primes = odd ? std::vector<std::uint64_t>{3, 5, 7} : std::vector<std::uint64_t>{2, 5};
    if (odd) spec.forbidden = {1};
    const RangeReport r = verify_range(Rational(1), spec, odd ? 3609 : 3634, odd ? 6000 : 5000,
                                       ResidueFilter{odd ? 8u : 3u, 1}, ro);
    print_range(out, name, r);
    return range_exit(r);
  }
  if (name == "odd15-full") return report_window(builtin_tables("odd15"), 3609, "odd15-window");
  if (name == "twofive-full") {
    bo.skip = {Rational(2)};
    return report_window(builtin_tables("sp(5)"), 6482, "sp5-window");
  }
  throw Error(ErrorCode::UnknownName, "unknown recipe '" + name + "'");
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact search and proof tooling for alpha-partitions", "recipart"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("recipart ") + RECIPART_VERSION);

  Common common;
  SpecFlags sf;
  std::uint64_t n = 0, lo = 0, hi = 0, big_n = 0, M = 0, horizon = 0;
  std::string alpha_text = "1";
  std::optional<std::uint64_t> max_solutions, X;
  std::string table_name, cert_out, store_dir, path, recipe, S_text, skip_text, m_text = "2";
  bool per_alpha = false, skip_base = false, list_recipes = false;
  std::uint64_t pool_max = 100, max_size = 6;

  const auto needs_alpha = [&](CLI::App* s) { s->add_option("--alpha", alpha_text, "target reciprocal sum p/q"); };

  auto* find = app.add_subcommand("find", "one alpha-partition of n");
  find->add_option("--n", n)->required();
  needs_alpha(find);
  add_spec_flags(find, sf);
  add_common(find, common);

  auto* en = app.add_subcommand("enum", "all alpha-partitions of n");
  en->add_option("--n", n)->required();
  needs_alpha(en);
  en->add_option("--max-solutions", max_solutions);
  add_spec_flags(en, sf);
  add_common(en, common);

  auto* count = app.add_subcommand("count", "number of alpha-partitions of n");
  count->add_option("--n", n)->required();
  needs_alpha(count);
  add_spec_flags(count, sf);
  add_common(count, common);

  auto* vr = app.add_subcommand("verify-range", "an alpha-partition exists for every n in [lo, hi]");
  vr->add_option("--lo", lo)->required();
  vr->add_option("--hi", hi)->required();
  needs_alpha(vr);
  vr->add_option("--residue", sf.residue, "only n = r mod m, as r:m");
  vr->add_option("--cert", cert_out, "write a range certificate here");
  add_spec_flags(vr, sf);
  add_common(vr, common);

  auto* bset = app.add_subcommand("bset", "B(n): reciprocal sums of distinct-part partitions of n");
  bset->add_option("--n", n)->required();
  add_common(bset, common);

  auto* bw = app.add_subcommand("bwindow", "B(lo, hi): intersection of B(i) for lo <= i <= hi");
  bw->add_option("--lo", lo)->required();
  bw->add_option("--hi", hi)->required();
  add_common(bw, common);

  auto* growth = app.add_subcommand("growth", "|B(n,N) \\ B(n-1,N)| for lo <= n <= hi");
  growth->add_option("--lo", lo)->required();
  growth->add_option("--hi", hi)->required();
  growth->add_option("--N", big_n)->required();
  add_common(growth, common);

  auto* nm = app.add_subcommand("nm", "threshold N_M for M-free 1-partitions");
  nm->add_option("--M", M)->required()->check(CLI::Range(2ULL, ~0ULL));
  nm->add_option("--verify", horizon, "re-derive the failure below N_M and existence up to this horizon");
  add_common(nm, common);

  auto* prove = app.add_subcommand("prove", "check a proof table collection and its base window");
  prove->add_option("--table", table_name)->required();
  prove->add_option("--X", X, "base threshold (default: the table's own)");
  prove->add_flag("--per-alpha", per_alpha, "use each alpha's own window");
  prove->add_flag("--skip-base", skip_base, "only check the five properties");
  prove->add_option("--skip", skip_text, "alphas whose base case is established elsewhere, e.g. 2");
  prove->add_option("--cert", cert_out, "write a proof-tables certificate here");
  prove->add_option("--store", store_dir, "certificate directory with base witnesses");
  add_common(prove, common);

  auto* cons = app.add_subcommand("construct", "build an alpha-partition of n from a table collection");
  cons->add_option("--table", table_name)->required();
  cons->add_option("--n", n)->required();
  needs_alpha(cons);
  cons->add_option("--X", X);
  cons->add_option("--store", store_dir, "certificate directory with base witnesses");
  add_common(cons, common);

  auto* synth = app.add_subcommand("synth", "search for proof rows for alpha");
  needs_alpha(synth);
  synth->add_option("--S", S_text, "the set S, e.g. 1,4/3,2")->required();
  synth->add_option("--m", m_text, "moduli to try, e.g. 2,3");
  synth->add_option("--pool-max", pool_max);
  synth->add_option("--max-size", max_size);
  synth->add_option("--X", X);
  add_spec_flags(synth, sf);
  add_common(synth, common);

  auto* vc = app.add_subcommand("verify-cert", "re-verify a certificate file");
  vc->add_option("path", path)->required();
  add_common(vc, common);

  auto* repro = app.add_subcommand("repro", "run a named reproduction recipe");
  repro->add_option("recipe", recipe);
  repro->add_flag("--list", list_recipes);
  add_common(repro, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "recipart " << RECIPART_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    RangeOptions ro;
    ro.jobs = common.jobs;
    ro.budget.max_nodes = common.max_nodes;
    const Rational alpha = Rational::parse(alpha_text);
    if (alpha.is_zero()) throw Error(ErrorCode::NonPositive, "alpha must be positive");

    if (find->parsed()) {
      const auto set = find_one(n, alpha, to_spec(sf), ro.budget);
      if (common.json) {
        out << (set ? serialize(PartitionCert{*set, to_spec(sf)}) : json({{"found", false}}).dump() + "\n");
      } else {
        out << (set ? braces(*set) : "none") << '\n';
      }
      return set ? kOk : kRefuted;
    }

    if (en->parsed()) {
      SearchBudget b = ro.budget;
      b.max_solutions = max_solutions;
      const EnumerationResult r = enumerate_bounded(n, alpha, to_spec(sf), b);
      if (common.json) {
        json sets = json::array();
        for (const auto& s : r.solutions) sets.push_back(s.parts());
        out << json({{"n", n}, {"alpha", alpha.str()}, {"complete", r.complete}, {"partitions", sets}}).dump(2)
            << '\n';
      } else {
        for (const auto& s : r.solutions) out << braces(s) << '\n';
        if (!r.complete) out << "(incomplete: a cap was hit)\n";
      }
      if (!r.solutions.empty()) return kOk;
      return r.complete ? kRefuted : kUnknown;
    }

    if (count->parsed()) {
      const std::uint64_t k = count_partitions(n, alpha, to_spec(sf), ro.budget);
      if (common.json) {
        out << json({{"n", n}, {"alpha", alpha.str()}, {"count", k}}).dump(2) << '\n';
      } else {
        out << k << '\n';
      }
      return kOk;
    }

    if (vr->parsed()) {
      const ConstraintSpec spec = to_spec(sf);
      const RangeReport r = verify_range(alpha, spec, lo, hi, to_filter(sf), ro);
      if (!cert_out.empty()) write_certificate(make_range_cert(alpha, spec, r), cert_path(cert_out));
      if (common.json) {
        json j = range_json(r);
        j["alpha"] = alpha.str();
        j["spec"] = spec.describe();
        out << j.dump(2) << '\n';
      } else {
        print_range(out, "alpha=" + alpha.str() + " " + spec.describe(), r);
      }
      return range_exit(r);
    }

    if (bset->parsed() || bw->parsed()) {
      const RationalSet s = bset->parsed() ? build_B(n) : build_B_window(lo, hi, common.jobs == 0 ? 1 : common.jobs);
      if (common.json) {
        out << json({{"n", s.n}, {"N", s.N}, {"size", s.size()}, {"members", rats(s.members)}}).dump(2) << '\n';
      } else {
        out << braces(s.members) << '\n' << "size " << s.size() << '\n';
      }
      return kOk;
    }

    if (growth->parsed()) {
      const auto rows = growth_table(lo, hi, big_n, common.jobs);
      if (common.json) {
        json a = json::array();
        for (const auto& r : rows) a.push_back({{"n", r.n}, {"count", r.count}});
        out << a.dump(2) << '\n';
      } else {
        out << growth_csv(rows);
      }
      return kOk;
    }

    if (nm->parsed()) {
      const NmCase c = nm_classify(M);
      json j = {{"M", M},
                {"value", c.value},
                {"exact", !c.upper_bound_only},
                {"classification", std::string(to_string(c.classification))}};
      if (c.divisor_witness) j["divisor_witness"] = *c.divisor_witness;
      if (c.congruence_caveat) j["congruence_modulus"] = *c.congruence_caveat;
      int code = kOk;
      std::optional<NmVerification> v;
      if (horizon > 0) {
        v = nm_verify(M, horizon, ro);
        if (v->failure_n) j["failure_n"] = *v->failure_n, j["failure_confirmed"] = v->failure_confirmed;
        if (v->existence) j["existence"] = range_json(*v->existence);
        j["holds"] = v->holds();
        code = !v->holds() ? (v->existence && v->existence->failures.empty() && v->failure_confirmed ? kUnknown
                                                                                                       : kRefuted)
                           : kOk;
      }
      if (common.json) {
        out << j.dump(2) << '\n';
      } else {
        out << "N_" << M << " = " << c.value << (c.upper_bound_only ? " (upper bound)" : "");
        if (c.congruence_caveat) out << ", for n = 1 mod " << *c.congruence_caveat;
        out << " [" << to_string(c.classification);
        if (c.divisor_witness) out << ", divisible by " << *c.divisor_witness;
        out << "]\n";
        if (v) {
          if (v->failure_n) {
            out << "n=" << *v->failure_n << (v->failure_confirmed ? " has no" : " has an") << " M-free 1-partition\n";
          }
          if (v->existence) print_range(out, "existence", *v->existence);
        }
      }
      return code;
    }

    if (prove->parsed()) {
      const TableCollection tables = builtin_tables(table_name);
      std::vector<PropertyReport> reports = check_properties(tables);
      for (std::size_t i = 0; i < tables.tables.size(); ++i) {
        if (tables.tables[i].M_prime) reports[i].congruence = check_congruence_variant(tables.tables[i]);
      }
      int code = kOk;
      json jr = json::array();
      for (const PropertyReport& r : reports) {
        json props = json::array();
        if (!common.json) out << "alpha=" << r.alpha.str() << ':';
        for (std::size_t p = 0; p < r.properties.size(); ++p) {
          const auto& pr = r.properties[p];
          props.push_back({{"status", std::string(to_string(pr.status))}, {"detail", pr.detail}});
          if (!common.json) out << " P" << p + 1 << '=' << to_string(pr.status);
          if (pr.status == PropertyStatus::Refuted) code = kRefuted;
          if (pr.status == PropertyStatus::Inconclusive && code == kOk) code = kUnknown;
        }
        json entry = {{"alpha", r.alpha.str()}, {"properties", props}};
        if (r.congruence) {
          entry["congruence"] = std::string(to_string(r.congruence->status));
          if (!common.json) out << " congruence=" << to_string(r.congruence->status);
          if (r.congruence->status != PropertyStatus::Verified) code = kRefuted;
        }
        if (!common.json) out << '\n';
        jr.push_back(entry);
      }
      json j = {{"table", tables.name}, {"reports", jr}};
      if (!skip_base) {
        const std::optional<std::uint64_t> x = X ? X : tables.X();
        if (!x) throw Error(ErrorCode::InvalidSpec, "no X: pass --X");
        StoreProvider store;
        if (!store_dir.empty()) {
          store = load_witness_store(store_dir);
        } else if (const auto root = cert_root()) {
          store = load_witness_store(*root);
        }
        const SearchProvider search(ro.budget);
        const ChainProvider chain({&store, &search});
        BaseWindowOptions bo;
        bo.jobs = common.jobs;
        bo.per_alpha_window = per_alpha;
        bo.skip = split_rationals(skip_text);
        const BaseWindowReport w = check_base_window(tables, *x, chain, bo);
        json base = json::object();
        for (const auto& [a, r] : w.per_alpha) {
          base[a.str()] = range_json(r);
          if (!common.json) print_range(out, "base alpha=" + a.str(), r);
          code = std::max(code, range_exit(r) == kRefuted ? int(kRefuted) : range_exit(r));
        }
        j["X"] = *x;
        j["window"] = w.window;
        j["base"] = base;
        if (!common.json) out << "X=" << *x << " window=" << w.window << (w.holds() ? " holds" : " does not hold") << '\n';
      }
      if (!cert_out.empty() && code == kOk) write_certificate(tables, cert_path(cert_out));
      if (common.json) out << j.dump(2) << '\n';
      return code;
    }

    if (cons->parsed()) {
      const TableCollection tables = builtin_tables(table_name);
      StoreProvider store;
      if (!store_dir.empty()) {
        store = load_witness_store(store_dir);
      } else if (const auto root = cert_root()) {
        store = load_witness_store(*root);
      }
      const SearchProvider search(ro.budget);
      const ChainProvider chain({&store, &search});
      const ConstructResult r = construct(alpha, n, tables, chain, X);
      if (common.json) {
        json steps = json::array();
        for (const auto& s : r.steps) steps.push_back({{"alpha", s.alpha.str()}, {"n", s.n}, {"row", s.row}, {"m", s.m}});
        out << json({{"n", n},
                     {"alpha", alpha.str()},
                     {"parts", r.set.parts()},
                     {"steps", steps},
                     {"base", {{"alpha", r.base_alpha.str()}, {"n", r.base_n}, {"source", r.base_source}}}})
                   .dump(2)
            << '\n';
      } else {
        out << braces(r.set) << '\n';
        out << "depth " << r.steps.size() << ", base " << r.base_alpha.str() << "-partition of " << r.base_n
            << " from " << r.base_source << '\n';
      }
      return kOk;
    }

    if (synth->parsed()) {
      SuggestParams p;
      p.m_values = split_ints(m_text, "--m");
      p.pool_max = pool_max;
      p.max_set_size = max_size;
      if (common.max_nodes) p.max_nodes = *common.max_nodes;
      if (X) p.X = X;
      const SuggestResult r = suggest_rows(alpha, split_rationals(S_text), to_spec(sf), p);
      json rows = json::array();
      for (const ProofRow& row : r.rows) {
        rows.push_back({{"i", row.index}, {"m", row.m}, {"beta", row.beta.str()}, {"A", row.A.parts()}});
        if (!common.json) {
          out << "i=" << row.index << " m=" << row.m << " beta=" << row.beta.str() << " A=" << braces(row.A)
              << " sum=" << row.A.n() << '\n';
        }
      }
      if (common.json) {
        out << json({{"alpha", alpha.str()}, {"rows", rows}, {"modulus", r.modulus}, {"uncovered", r.uncovered}})
                   .dump(2)
            << '\n';
      } else if (!r.covers()) {
        out << "uncovered residues mod " << r.modulus << ':';
        for (auto u : r.uncovered) out << ' ' << u;
        out << '\n';
      }
      return r.covers() ? kOk : kUnknown;
    }

    if (vc->parsed()) {
      const CertReport r = verify_certificate(cert_path(path));
      if (common.json) {
        out << json({{"kind", std::string(to_string(r.kind))}, {"items", r.items}, {"summary", r.summary},
                     {"verified", true}})
                   .dump(2)
            << '\n';
      } else {
        out << "verified " << to_string(r.kind) << ": " << r.summary << '\n';
      }
      return kOk;
    }

    if (repro->parsed()) {
      if (list_recipes || recipe.empty()) {
        for (const Recipe& r : kRecipes) {
          out << r.name << (r.long_running ? " (long)" : "") << ": " << r.what << '\n';
        }
        return kOk;
      }
      return run_recipe(recipe, common, out);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRefuted;
  }
  return kUsage;
}

}  // namespace recipart::cli
