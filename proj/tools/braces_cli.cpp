// braces: list, verify, classify and enumerate left braces of order p, p^2, p^3
// and export their Yang-Baxter solutions.
//
// Exit codes: 0 ok, 1 mathematical violation, 2 usage or I/O error,
// 3 resource bound hit (enumeration; checkpoint written).

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braces/catalog.hpp"
#include "braces/classify.hpp"
#include "braces/io.hpp"
#include "braces/selftest.hpp"
#include "braces/ybe.hpp"

using namespace braces;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kViolation = 1, kUsage = 2, kResource = 3;

int default_jobs() {
  if (const char* env = std::getenv("BRACES_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

bool matches_shape(const CatalogEntry& e, const std::string& shape) {
  const AbelianGroup A = e.additive();
  return shape.empty() || shape == A.shape_name() || shape == A.generic_shape_name();
}

int smallest_prime_factor(std::int64_t n) {
  for (int d = 2; static_cast<std::int64_t>(d) * d <= n; ++d)
    if (n % d == 0) return d;
  return static_cast<int>(n);
}

AbelianGroup shape_from_flags(const std::string& shape, int p) {
  if (p == 0) {
    const std::size_t end = shape.find('x');
    const std::string first = shape.substr(1, end == std::string::npos ? std::string::npos : end - 1);
    if (shape.empty() || shape[0] != 'z' || first.empty() || first.find_first_not_of("0123456789") != std::string::npos)
      throw ShapeError("give --p with a generic shape such as '" + shape + "'");
    p = smallest_prime_factor(std::stoll(first));
  }
  return AbelianGroup::parse(p, shape);
}

int cmd_catalog(int p, const std::string& shape, int socle_filter, const std::string& format, bool small) {
  std::vector<CatalogEntry> rows;
  if (small)
    for (auto& e : small_catalog_entries(p)) rows.push_back(std::move(e));
  for (auto& e : catalog_entries(p)) rows.push_back(std::move(e));
  std::erase_if(rows, [&](const CatalogEntry& e) {
    return !matches_shape(e, shape) || (socle_filter > 0 && e.socle_order != socle_filter);
  });

  if (format == "json") {
    json out = json::array();
    for (const auto& e : rows) {
      json params = json::object();
      for (const auto& [k, v] : e.params) params[k] = v;
      out.push_back({{"id", e.id},
                     {"shape", e.additive().shape_name()},
                     {"socle_order", e.socle_order},
                     {"params", params},
                     {"mult_group", e.claimed_mult_group.to_string()}});
    }
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "id,shape,socle_order,params,mult_group\n";
    for (const auto& e : rows)
      std::cout << e.id << "," << e.additive().shape_name() << "," << e.socle_order << ",\"" << e.params_string()
                << "\"," << e.claimed_mult_group.to_string() << "\n";
  } else {
    for (const auto& e : rows) {
      std::printf("%-30s %-10s soc %-4d %-16s %s\n", e.id.c_str(), e.additive().shape_name().c_str(), e.socle_order,
                  e.params_string().c_str(), e.claimed_mult_group.to_string().c_str());
    }
    std::cout << rows.size() << " entries\n";
  }
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& entry, bool lenient) {
  BraceDocument doc;
  try {
    if (!entry.empty()) {
      const CatalogEntry e = find_entry(entry);
      doc = document_from_brace(build_entry(e), e.id);
      doc.mult_group = e.claimed_mult_group.to_string();
      doc.socle_order = e.socle_order;
    } else {
      doc = read_document(input);
    }
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  LoadResult r;
  try {
    r = load_document(doc, !lenient);
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  if (!r.report.ok()) {
    std::cout << "violation: " << r.report.violation->to_string() << "\n";
    return kViolation;
  }
  const Brace& B = *r.brace;
  std::cout << "ok: order " << B.order() << ", additive " << B.additive().shape_name() << ", socle "
            << socle(B).order << ", multiplicative group " << mult_group_name(B).to_string() << "\n";
  return kOk;
}

int cmd_export(const std::string& entry) {
  const CatalogEntry e = find_entry(entry);
  BraceDocument d = document_from_brace(build_entry(e), e.id);
  d.name = e.id;
  std::cout << serialize_document(d) << "\n";
  return kOk;
}

int cmd_classify(int p) {
  const ClassificationReport r = classify_catalog(p);
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    std::cout << "class " << i + 1 << ":";
    for (const auto& id : r.classes[i]) std::cout << " " << id;
    std::cout << "  [" << r.fingerprints.at(r.representatives[i]).summary() << "]\n";
  }
  std::cout << r.classes.size() << " classes among " << r.fingerprints.size() << " entries\n";
  return kOk;
}

int cmd_enumerate(const std::string& shape, int p, const EnumerateOptions& opts, bool print_tables) {
  const AbelianGroup A = shape_from_flags(shape, p);
  const EnumerationResult r = enumerate_braces(A, opts);
  if (print_tables)
    for (const Brace& b : r.braces) {
      BraceDocument d = document_from_brace(b);
      std::cout << serialize_document(d) << "\n";
    }
  std::cout << "shape " << A.shape_name() << " mode " << (opts.up_to_iso ? "up-to-iso" : "all")
            << (opts.trivial_socle_only ? " trivial-socle" : "") << "\n";
  std::cout << (opts.up_to_iso ? "classes " : "braces ") << r.braces.size() << "\n";
  std::cout << "regular subgroups visited " << r.solutions << ", nodes " << r.nodes << ", seeds " << r.seeds_done << "/"
            << r.seeds_total << "\n";
  if (r.status == EnumStatus::ResourceBound) {
    std::cout << "status resource-bound" << (opts.checkpoint_path.empty() ? "" : ", checkpoint " + opts.checkpoint_path)
              << "\n";
    return kResource;
  }
  std::cout << "status complete\n";
  return kOk;
}

int cmd_ybe(const std::string& entry, bool check, const std::string& format, int jobs) {
  const CatalogEntry e = find_entry(entry);
  const Brace B = build_entry(e);
  const SolutionMap m = solution_from_brace(B, jobs);
  const auto quads = solution_quadruples(m);
  if (format == "json") {
    std::cout << json{{"entry_id", e.id}, {"size", m.size()}, {"quadruples", quads}}.dump() << "\n";
  } else {
    std::cout << "a,b,s1,s2\n";
    for (const auto& q : quads) std::cout << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << "\n";
  }
  if (check) {
    const VerifyReport r = verify_yang_baxter(m, jobs);
    std::cerr << (r.ok() ? "braid relation, involutivity, non-degeneracy: ok" : "violation: " + r.violation->to_string())
              << (m.is_flip() ? " (flip)" : "") << "\n";
    if (!r.ok()) return kViolation;
  }
  return kOk;
}

int cmd_selftest(const std::vector<int>& primes, bool deep, int jobs, const std::vector<int>& only) {
  SelftestOptions o;
  if (!primes.empty()) o.primes = primes;
  o.deep = deep;
  o.jobs = jobs;
  o.only = only;
  bool ok = true;
  run_selftest(o, [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    ok = ok && r.pass;
  });
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left braces of order p, p^2, p^3: catalog, verification, classification, enumeration, YBE solutions"};
  app.require_subcommand(1);
  int jobs = default_jobs();
  app.add_option("--jobs,-j", jobs, "worker threads (default: $BRACES_JOBS or 1)")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "list catalog entries of order p^3");
  int cat_p = 0, cat_socle = 0;
  std::string cat_shape, cat_format = "pretty";
  bool cat_small = false;
  catalog->add_option("--p", cat_p, "prime")->required();
  catalog->add_option("--shape", cat_shape, "additive group: zp3, zpxzp2, zpxzpxzp or concrete, e.g. z3xz9");
  catalog->add_option("--socle", cat_socle, "socle order");
  catalog->add_option("--format", cat_format)->check(CLI::IsMember({"json", "csv", "pretty"}));
  catalog->add_flag("--small", cat_small, "include the braces of order p and p^2");

  auto* verify = app.add_subcommand("verify", "check a brace document or catalog entry");
  std::string ver_input, ver_entry;
  bool ver_lenient = false;
  auto* in_opt = verify->add_option("--input", ver_input, "BraceDocument JSON file");
  auto* en_opt = verify->add_option("--entry", ver_entry, "catalog entry id");
  in_opt->excludes(en_opt);
  verify->add_flag("--lenient", ver_lenient, "warn about annotation mismatches instead of failing");

  auto* exp = app.add_subcommand("export", "print a catalog entry as a BraceDocument");
  std::string exp_entry;
  exp->add_option("--entry", exp_entry)->required();

  auto* classify = app.add_subcommand("classify", "partition the order p^3 catalog into isomorphism classes");
  int cls_p = 0;
  classify->add_option("--p", cls_p)->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate braces on an additive group via the holomorph");
  std::string en_shape;
  int en_p = 0;
  EnumerateOptions en_opts;
  en_opts.up_to_iso = false;
  bool en_tables = false;
  enumerate->add_option("--shape", en_shape, "e.g. z8, z2xz4, z3xz3xz3")->required();
  enumerate->add_option("--p", en_p, "prime (needed for generic shapes like zpxzp2)");
  enumerate->add_flag("--up-to-iso", en_opts.up_to_iso, "one brace per isomorphism class");
  enumerate->add_flag("--trivial-socle", en_opts.trivial_socle_only, "only braces with trivial socle");
  enumerate->add_option("--checkpoint", en_opts.checkpoint_path, "progress file, resumed if present");
  enumerate->add_option("--max-nodes", en_opts.max_nodes, "search budget; 0 = unlimited");
  enumerate->add_flag("--tables", en_tables, "print each brace as a BraceDocument");

  auto* ybe = app.add_subcommand("ybe", "export the Yang-Baxter solution of a catalog entry");
  std::string ybe_entry, ybe_format = "csv";
  bool ybe_check = false;
  ybe->add_option("--entry", ybe_entry)->required();
  ybe->add_flag("--check", ybe_check, "verify braid relation, involutivity, non-degeneracy");
  ybe->add_option("--format", ybe_format)->check(CLI::IsMember({"csv", "json"}));

  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  std::vector<int> st_primes, st_only;
  bool st_deep = false;
  selftest->add_option("--p", st_primes, "restrict to these primes (default 2 3 5)");
  selftest->add_flag("--deep", st_deep, "also enumerate (Z/3)^3 and classify p = 5 pairwise");
  selftest->add_option("--only", st_only, "criterion numbers to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  en_opts.jobs = jobs;

  try {
    if (*catalog) return cmd_catalog(cat_p, cat_shape, cat_socle, cat_format, cat_small);
    if (*verify) {
      if (ver_input.empty() && ver_entry.empty()) {
        std::cerr << "error: verify needs --input or --entry\n";
        return kUsage;
      }
      return cmd_verify(ver_input, ver_entry, ver_lenient);
    }
    if (*exp) return cmd_export(exp_entry);
    if (*classify) return cmd_classify(cls_p);
    if (*enumerate) return cmd_enumerate(en_shape, en_p, en_opts, en_tables);
    if (*ybe) return cmd_ybe(ybe_entry, ybe_check, ybe_format, jobs);
    if (*selftest) return cmd_selftest(st_primes, st_deep, jobs, st_only);
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EnumerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArithmeticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
