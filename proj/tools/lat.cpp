#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lat/catalog.hpp"
#include "lat/criterion.hpp"
#include "lat/decomposition.hpp"
#include "lat/enumeration.hpp"
#include "lat/expr.hpp"
#include "lat/reduction.hpp"
#include "lat/report.hpp"
#include "acceptance_suite.hpp"

namespace {

using namespace lat;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Thrown for bad arguments that CLI11 cannot see (bad expressions, files).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GramMatrix lattice_arg(const std::string& text) {
  try {
    if (!text.empty() && text[0] == '@') return read_gram_file(text.substr(1));
    return parse_expr(text);
  } catch (const Error& e) {
    throw UsageError("cannot read lattice '" + text + "': " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

std::vector<GramMatrix> lattice_list(const std::string& s) {
  std::vector<GramMatrix> out;
  for (const auto& part : split(s, ';')) out.push_back(lattice_arg(part));
  return out;
}

FormSet form_set(const std::string& s) {
  try {
    return make_form_set(lattice_list(s), s);
  } catch (const DuplicateMember& e) {
    throw UsageError(e.what());
  }
}

Rational rational_arg(const std::string& s) {
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

void print_gram(std::ostream& os, const GramMatrix& g, const std::string& indent = "  ") {
  std::istringstream in(to_text(g));
  std::string line;
  std::getline(in, line);  // rank line
  while (std::getline(in, line)) os << indent << line << "\n";
}

void print_matrix(std::ostream& os, const IntMatrix& m, const std::string& indent = "  ") {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "\n";
  }
}

std::string rank_det(const GramMatrix& g) {
  return "rank " + std::to_string(g.rank()) + ", det " + to_string(det(g));
}

struct Context {
  bool json = false;
  std::ostream& out = std::cout;
  void emit(const Json& j) { out << j.dump(2) << "\n"; }
};

int cmd_info(Context& ctx, const std::string& expr, std::int64_t counts_up_to) {
  const GramMatrix g = lattice_arg(expr);
  const Integer mn = g.rank() ? min_norm(g) : Integer(0);
  const Rational mdn = g.rank() ? min_dual_norm(g) : Rational(0);
  const auto counts = norm_counts(g, counts_up_to);
  if (ctx.json) {
    Json j;
    j["rank"] = g.rank();
    j["det"] = to_json(det(g));
    j["min_norm"] = to_json(mn);
    j["min_dual_norm"] = to_string(mdn);
    j["unimodular"] = det(g) == 1;
    j["norm_counts"] = counts;
    j["gram"] = to_text(g);
    ctx.emit(j);
    return kOk;
  }
  ctx.out << "rank " << g.rank() << "\ndet " << det(g) << "\nmin norm " << mn << "\nmin dual norm "
          << to_string(mdn) << "\nnorm counts";
  for (std::size_t m = 1; m < counts.size(); ++m) ctx.out << " " << m << ":" << counts[m];
  ctx.out << "\ngram\n";
  print_gram(ctx.out, g);
  return kOk;
}

int cmd_shortvec(Context& ctx, const std::string& expr, const std::string& bound_text) {
  const GramMatrix g = lattice_arg(expr);
  const ShortVectorList list = short_vectors(g, rational_arg(bound_text));
  if (ctx.json) {
    Json j;
    j["bound"] = to_string(list.bound);
    j["count"] = list.vectors.size();
    Json vs = Json::array();
    for (const auto& v : list.vectors) vs.push_back({{"norm", v.norm}, {"coords", v.coords}});
    j["vectors"] = std::move(vs);
    ctx.emit(j);
    return kOk;
  }
  ctx.out << list.vectors.size() << " vectors up to sign with norm <= " << to_string(list.bound) << "\n";
  for (const auto& v : list.vectors) {
    ctx.out << "  " << v.norm << ":";
    for (auto c : v.coords) ctx.out << " " << c;
    ctx.out << "\n";
  }
  return kOk;
}

int cmd_embed(Context& ctx, const std::string& target, const std::string& source) {
  const GramMatrix q = lattice_arg(target), l = lattice_arg(source);
  const auto e = represents(q, l);
  if (ctx.json) {
    Json j;
    j["represents"] = e.has_value();
    j["embedding"] = e ? to_json(*e) : Json(nullptr);
    ctx.emit(j);
  } else if (e) {
    ctx.out << "embedding (columns are images of the source basis)\n";
    print_matrix(ctx.out, e->map);
  } else {
    ctx.out << "target does not represent source\n";
  }
  return e ? kOk : kFailed;
}

int cmd_complement(Context& ctx, const std::string& target, const std::string& source) {
  const GramMatrix q = lattice_arg(target), l = lattice_arg(source);
  const auto e = represents(q, l);
  if (!e) {
    if (ctx.json)
      ctx.emit(Json{{"represents", false}});
    else
      ctx.out << "target does not represent source\n";
    return kFailed;
  }
  const Embedding comp = orthogonal_complement(q, *e);
  std::optional<SummandSplit> split;
  if (det(l) == 1) split = unimodular_summand_split(q, *e);
  if (ctx.json) {
    Json j;
    j["represents"] = true;
    j["embedding"] = to_json(*e);
    j["complement"] = to_json(comp);
    j["summand_certificate"] = split ? to_json(split->certificate) : Json(nullptr);
    ctx.emit(j);
    return kOk;
  }
  ctx.out << "complement: " << rank_det(comp.source) << "\n";
  print_gram(ctx.out, comp.source);
  ctx.out << "complement basis in target coordinates\n";
  print_matrix(ctx.out, comp.map);
  if (split) ctx.out << "source is unimodular: target = source (+) complement\n";
  return kOk;
}

int cmd_decompose(Context& ctx, const std::string& expr) {
  const GramMatrix g = lattice_arg(expr);
  const Decomposition d = indecomposable_summands(g);
  if (ctx.json) {
    ctx.emit(to_json(d));
    return kOk;
  }
  ctx.out << d.summands.size() << " indecomposable summand" << (d.summands.size() == 1 ? "" : "s") << "\n";
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    ctx.out << "summand " << i + 1 << ": " << rank_det(d.summands[i]) << "\n";
    print_gram(ctx.out, d.summands[i]);
  }
  return kOk;
}

int cmd_dual(Context& ctx, const std::string& expr) {
  const GramMatrix g = lattice_arg(expr);
  const RationalMatrix inv = dual_gram(g);
  const bool integral = to_integer(inv).has_value();
  if (ctx.json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < inv.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < inv.cols(); ++j) row.push_back(to_string(inv(i, j)));
      rows.push_back(std::move(row));
    }
    ctx.emit(Json{{"dual_gram", rows},
                  {"det", to_string(Rational(1) / Rational(det(g)))},
                  {"integral", integral},
                  {"min_dual_norm", to_string(min_dual_norm(g))}});
    return kOk;
  }
  ctx.out << "dual Gram (det 1/" << det(g) << (integral ? ", integral" : "") << ")\n" << inv;
  ctx.out << "min dual norm " << to_string(min_dual_norm(g)) << "\n";
  return kOk;
}

SearchSpace make_space(std::size_t rank, std::int64_t max_diag, std::int64_t max_det) {
  SearchSpace s{rank, max_diag, std::nullopt};
  if (max_det > 0) s.max_det = Integer(max_det);
  return s;
}

int cmd_enumerate(Context& ctx, const SearchSpace& space, Shard shard) {
  const auto classes = enumerate_classes(space, shard);
  if (ctx.json) {
    Json list = Json::array();
    for (const auto& g : classes) list.push_back(to_text(g));
    ctx.emit(Json{{"space", to_json(space)}, {"count", classes.size()}, {"classes", list}});
    return kOk;
  }
  ctx.out << classes.size() << " classes\n";
  for (const auto& g : classes) {
    ctx.out << rank_det(g) << "\n";
    print_gram(ctx.out, g);
  }
  return kOk;
}

int cmd_check_criterion(Context& ctx, const std::string& a, const std::string& set, const SearchSpace& space,
                        Shard shard) {
  const auto targets = lattice_list(a);
  const FormSet s = form_set(set);
  CriterionReport r;
  try {
    r = check_criterion(targets, s, space, shard);
  } catch (const MemberNotInS& e) {
    throw UsageError(e.what());
  }
  if (ctx.json) {
    ctx.emit(to_json(r));
  } else {
    ctx.out << verdict_name(r.verdict) << " (rank " << space.rank << ", max_diag " << space.max_diag;
    if (space.max_det) ctx.out << ", max_det " << *space.max_det;
    if (shard.count > 1) ctx.out << ", shard " << shard.index << "/" << shard.count;
    ctx.out << "): " << r.classes_checked << " classes checked\n";
    if (r.counterexample) {
      ctx.out << "Q represents every set member but not\n";
      print_gram(ctx.out, r.counterexample->missing);
      ctx.out << "Q =\n";
      print_gram(ctx.out, r.counterexample->q);
    }
  }
  return r.verdict == Verdict::VerifiedWithinSpace ? kOk : kFailed;
}

int cmd_check_minimality(Context& ctx, const std::string& a, const std::string& set, const std::string& witnesses,
                         const SearchSpace& space) {
  const auto targets = lattice_list(a);
  const FormSet s = form_set(set);
  const MinimalityReport r = check_minimality(targets, s, lattice_list(witnesses), space);
  if (ctx.json) {
    ctx.emit(to_json(r));
  } else {
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
      const auto& e = r.entries[i];
      ctx.out << "drop member " << i + 1 << " (" << rank_det(e.dropped) << "): ";
      if (!e.witness) {
        ctx.out << "no witness found\n";
        continue;
      }
      ctx.out << "witness " << (e.witness_from_list ? "from list" : "from search space") << "\n";
      print_gram(ctx.out, *e.witness, "    ");
    }
    ctx.out << (r.minimal() ? "minimal" : "not shown minimal") << "\n";
  }
  return r.minimal() ? kOk : kFailed;
}

int cmd_check_prop2(Context& ctx, const std::string& l, const std::string& l_prime) {
  const Prop2Result r = check_prop2_hypothesis(lattice_arg(l), lattice_arg(l_prime));
  if (ctx.json) {
    ctx.emit(to_json(r));
  } else {
    ctx.out << "generating bound " << r.generating_bound << ", min dual norm " << to_string(r.min_dual_norm) << ": "
            << (r.holds ? "holds" : "fails") << "\n";
  }
  return r.holds ? kOk : kFailed;
}

int cmd_check_prop3(Context& ctx, const std::string& ground, const std::string& parts_text) {
  PartitionFamily family{form_set(ground), {}};
  for (const auto& part : split(parts_text, ';')) {
    std::vector<std::size_t> idx;
    for (const auto& s : split(part, ',')) {
      try {
        idx.push_back(std::stoul(s));
      } catch (const std::exception&) {
        throw UsageError("bad part index '" + s + "'");
      }
      if (idx.back() >= family.ground.members.size()) throw UsageError("part index out of range: " + s);
    }
    if (idx.empty()) throw UsageError("empty part");
    family.parts.push_back(std::move(idx));
  }
  const Prop3Report r = check_prop3(family);
  if (ctx.json) {
    ctx.emit(to_json(r));
  } else {
    for (std::size_t i = 0; i < r.unimodular.size(); ++i)
      ctx.out << "member " << i << (r.unimodular[i] ? " unimodular" : " NOT unimodular") << "\n";
    for (auto [i, j] : r.not_coprime) ctx.out << "members " << i << " and " << j << " share a summand\n";
    ctx.out << (r.covers_ground ? "parts cover the ground set" : "parts do NOT cover the ground set") << "\n";
    for (std::size_t p = 0; p < r.part_needed.size(); ++p)
      ctx.out << "part " << p << (r.part_needed[p] ? " needed" : " redundant") << "\n";
    ctx.out << (r.passed() ? "passed" : "failed") << "\n";
  }
  return r.passed() ? kOk : kFailed;
}

int cmd_verify_paper(Context& ctx, bool slow) {
  auto options = suite::options_from_env();
  options.slow = options.slow || slow;
  Json results = Json::array();
  int failed = 0;
  suite::run_all(options, [&](const suite::Result& r) {
    failed += r.passed ? 0 : 1;
    if (ctx.json) {
      results.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"notes", r.notes}});
      return;
    }
    ctx.out << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << "\n";
    for (const auto& n : r.notes) ctx.out << "    " << n << "\n";
    ctx.out.flush();
  });
  if (ctx.json) ctx.emit(Json{{"passed", failed == 0}, {"criteria", results}});
  return failed == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lat: exact tools for positive-definite integral lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_flag("--json", ctx.json, "Emit a JSON report");
  app.footer(
      "Lattices are expressions such as \"E8 + diag(1,1,2)\", \"2*Zn(3)\", \"Dn(4)^2\" or @file in the Gram text "
      "format. Set-valued options separate members with ';'.\n"
      "Exit status: 0 success, 1 counterexample or failed check, 2 usage or parse error.");

  std::string lat1, lat2, bound = "4", set, witnesses, ground, parts;
  std::int64_t counts_up_to = 4, max_diag = 4, max_det = 0;
  std::size_t rank = 3, shards = 1, shard = 0;
  bool slow = false;

  auto* info = app.add_subcommand("info", "Rank, det, minima and norm counts");
  info->add_option("lattice", lat1)->required();
  info->add_option("--counts", counts_up_to, "Count vectors of norm up to this value")->check(CLI::NonNegativeNumber);

  auto* shortvec = app.add_subcommand("shortvec", "Vectors of norm at most a bound, up to sign");
  shortvec->add_option("lattice", lat1)->required();
  shortvec->add_option("--bound", bound, "Norm bound (integer or p/q)")->capture_default_str();

  auto* embed = app.add_subcommand("embed", "Search for an embedding of --source into --target");
  embed->add_option("--target", lat1)->required();
  embed->add_option("--source", lat2)->required();

  auto* complement = app.add_subcommand("complement", "Orthogonal complement of an embedded --source");
  complement->add_option("--target", lat1)->required();
  complement->add_option("--source", lat2)->required();

  auto* decompose = app.add_subcommand("decompose", "Indecomposable orthogonal summands");
  decompose->add_option("lattice", lat1)->required();

  auto* dual = app.add_subcommand("dual", "Dual Gram matrix and its minimum");
  dual->add_option("lattice", lat1)->required();

  auto add_space = [&](CLI::App* sub) {
    sub->add_option("--rank", rank, "Rank of the forms searched")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--max-diag", max_diag, "Largest reduced diagonal entry")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-det", max_det, "Optional determinant bound")->check(CLI::PositiveNumber);
  };
  auto add_shards = [&](CLI::App* sub) {
    sub->add_option("--shards", shards, "Number of shards")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--shard", shard, "Shard index in [0, shards)")->capture_default_str();
  };

  auto* enumerate = app.add_subcommand("enumerate", "One form per isometry class in a search space");
  add_space(enumerate);
  add_shards(enumerate);

  auto* criterion = app.add_subcommand("check-criterion", "Search a space for forms representing --set but not --a");
  criterion->add_option("--a", lat1, "Target form(s), ';'-separated")->required();
  criterion->add_option("--set", set, "Candidate criterion set, ';'-separated")->required();
  add_space(criterion);
  add_shards(criterion);

  auto* minimality = app.add_subcommand("check-minimality", "Find a witness for dropping each set member");
  minimality->add_option("--a", lat1, "Target form(s), ';'-separated")->required();
  minimality->add_option("--set", set, "Criterion set, ';'-separated")->required();
  minimality->add_option("--witnesses", witnesses, "Candidate witnesses tried first, ';'-separated");
  add_space(minimality);

  auto* prop2 = app.add_subcommand("check-prop2", "Is --l-prime generated below the dual minimum of --l?");
  prop2->add_option("--l", lat1)->required();
  prop2->add_option("--l-prime", lat2)->required();

  auto* prop3 = app.add_subcommand("check-prop3", "Check a family of parts of a coprime unimodular ground set");
  prop3->add_option("--ground", ground, "Ground set, ';'-separated")->required();
  prop3->add_option("--parts", parts, "Parts as ground indices, e.g. \"0,1;1\"")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run the full reproduction suite");
  verify->add_flag("--slow", slow, "Include the Leech enumeration checks (also LAT_SLOW_TESTS=1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (shard >= shards) throw UsageError("--shard must be smaller than --shards");
    const SearchSpace space = make_space(rank, max_diag, max_det);
    const Shard sh{shard, shards};
    if (*info) return cmd_info(ctx, lat1, counts_up_to);
    if (*shortvec) return cmd_shortvec(ctx, lat1, bound);
    if (*embed) return cmd_embed(ctx, lat1, lat2);
    if (*complement) return cmd_complement(ctx, lat1, lat2);
    if (*decompose) return cmd_decompose(ctx, lat1);
    if (*dual) return cmd_dual(ctx, lat1);
    if (*enumerate) return cmd_enumerate(ctx, space, sh);
    if (*criterion) return cmd_check_criterion(ctx, lat1, set, space, sh);
    if (*minimality) return cmd_check_minimality(ctx, lat1, set, witnesses, space);
    if (*prop2) return cmd_check_prop2(ctx, lat1, lat2);
    if (*prop3) return cmd_check_prop3(ctx, ground, parts);
    if (*verify) return cmd_verify_paper(ctx, slow);
  } catch (const UsageError& e) {
    std::cerr << "lat: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "lat: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
