#include "rghw/cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rghw/codes.hpp"
#include "rghw/error.hpp"
#include "rghw/polynomials.hpp"

namespace rghw::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kMaxListedRanks = 1'000'000;

const std::vector<std::vector<int>> kDefaultShapes = {{2}, {3}, {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

template <class Int>
Int parse_int(std::string_view text, std::string_view what) {
  Int value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    fail(ErrorCode::InvalidArgument, std::string(what) + ": '" + std::string(text) + "' is not an integer");
  }
  return value;
}

template <class Int>
std::vector<Int> parse_list(std::string_view text, std::string_view what) {
  std::vector<Int> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_int<Int>(part, what));
  return out;
}

std::string join(const std::vector<int>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(sep) : "") + std::to_string(v[i]);
  return out;
}

SubsetPolicy parse_policy(const std::string& name) {
  if (name == "first") return SubsetPolicy::first_elements;
  if (name == "last") return SubsetPolicy::last_elements;
  fail(ErrorCode::InvalidArgument, "policy must be 'first' or 'last', got '" + name + "'");
}

struct QueryArgs {
  std::uint32_t q = 0;
  std::string sizes;
  int u1 = 0;
  int u2 = -1;
  std::string r = "all";
  std::string subsets;
  std::string policy = "first";
  bool oracle = false;
  std::string method = "support";
  std::uint64_t max_states = OracleBudget{}.max_states;
  std::uint64_t time_cap = 300;
  std::string format = "text";
};

struct Context {
  CartesianGrid grid;
  DegreeBand band;
  std::uint64_t ell = 0;
};

void warn_if_permuted(const BoxShape& shape, const std::vector<int>& given, std::ostream& err) {
  if (!shape.was_permuted()) return;
  std::vector<int> perm;
  for (std::size_t i : shape.permutation()) perm.push_back(static_cast<int>(i) + 1);
  err << "WARNING: sizes " << join(given, ",") << " sorted ascending to " << join(shape.dims(), ",")
      << "; coordinate i now holds input coordinate (" << join(perm, ",") << ")[i]\n";
}

CartesianGrid make_grid(const QueryArgs& a, std::ostream& err) {
  const Field field(a.q);
  const auto sizes = parse_list<int>(a.sizes, "--sizes");
  std::optional<CartesianGrid> grid;
  if (!a.subsets.empty()) {
    std::vector<std::vector<std::uint32_t>> lists;
    for (const auto& part : split(a.subsets, ';')) lists.push_back(parse_list<std::uint32_t>(part, "--subsets"));
    grid.emplace(build_grid(field, sizes, lists));
  } else {
    grid.emplace(build_grid(field, sizes, parse_policy(a.policy)));
  }
  warn_if_permuted(grid->shape(), sizes, err);
  return *grid;
}

Context make_context(const QueryArgs& a, std::ostream& err) {
  CartesianGrid grid = make_grid(a, err);
  const DegreeBand band(a.u2, a.u1);
  validate_band(grid.shape(), band);
  const std::uint64_t ell = band_size(grid.shape(), band);
  return Context{std::move(grid), band, ell};
}

OracleBudget make_budget(std::uint64_t max_states, std::uint64_t time_cap) {
  OracleBudget budget{max_states, time_cap};
  budget.validate();
  return budget;
}

std::vector<std::uint64_t> requested_ranks(const QueryArgs& a, const Context& ctx) {
  if (a.r == "all") {
    if (ctx.ell > kMaxListedRanks) {
      fail(ErrorCode::RankOutOfRange, "ell = " + std::to_string(ctx.ell) + " exceeds " +
                                          std::to_string(kMaxListedRanks) + " rows; pass --r");
    }
    std::vector<std::uint64_t> rs(ctx.ell);
    for (std::uint64_t r = 1; r <= ctx.ell; ++r) rs[r - 1] = r;
    return rs;
  }
  const auto r = parse_int<std::uint64_t>(a.r, "--r");
  WeightQuery{ctx.grid.shape(), ctx.band, r}.validate();
  return {r};
}

json subsets_json(const CartesianGrid& grid) {
  json out = json::array();
  for (const auto& subset : grid.subsets()) {
    json row = json::array();
    for (auto x : subset) row.push_back(x.value);
    out.push_back(row);
  }
  return out;
}

json query_json(const QueryArgs& a, const Context& ctx) {
  json q;
  q["q"] = a.q;
  q["sizes"] = ctx.grid.shape().dims();
  q["subsets"] = subsets_json(ctx.grid);
  q["u1"] = ctx.band.u1;
  q["u2"] = ctx.band.u2;
  q["n"] = ctx.grid.size();
  q["ell"] = ctx.ell;
  q["r"] = a.r == "all" ? json(nullptr) : json(parse_int<std::uint64_t>(a.r, "--r"));
  q["oracle"] = a.oracle ? json(a.method) : json(nullptr);
  return q;
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string render_vector(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i].value);
  return s + "]";
}

std::string render_witness(const OracleResult& res) {
  std::string s;
  switch (res.method) {
    case OracleMethod::subspace_echelon:
    case OracleMethod::subspace_graph:
      for (const auto& v : res.witness_vectors) s += (s.empty() ? "" : " ") + render_vector(v);
      return "basis " + s;
    case OracleMethod::coordinate_windows:
      for (auto t : res.witness_positions) s += (s.empty() ? "" : ",") + std::to_string(t);
      return "positions {" + s + "}";
    case OracleMethod::polynomial_families:
      for (const auto& f : res.witness_polys) s += (s.empty() ? "" : "; ") + render(f);
      return "family " + s;
  }
  return s;
}

struct OracleOutcome {
  OracleResult result;
  bool witness_ok = false;
};

OracleOutcome run_oracle(const CartesianGrid& grid, const DegreeBand& band, std::uint64_t r, OracleChoice choice,
                         const OracleBudget& budget) {
  OracleOutcome out;
  if (choice == OracleChoice::families) {
    out.result = oracle_max_zeros_families(grid, band, r, budget);
    out.witness_ok = verify_family_witness(grid, band, r, out.result);
    return out;
  }
  const auto c1 = build_code(grid, band.u1);
  const auto c2 = build_code(grid, band.u2);
  if (choice == OracleChoice::window) {
    out.result = oracle_rghw_window(c1, c2, r, budget);
    out.witness_ok = verify_window_witness(c1, c2, r, out.result);
  } else {
    out.result = oracle_rghw_support(c1, c2, r, budget);
    out.witness_ok = verify_support_witness(c1, c2, r, out.result);
  }
  return out;
}

// Column-aligned plain text table.
void emit_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  }
}

void add_query_options(CLI::App* sub, QueryArgs& a, bool with_rank) {
  sub->add_option("--q", a.q, "Field order, a prime power")->required();
  sub->add_option("--sizes", a.sizes, "Subset sizes d_1,...,d_m")->required();
  sub->add_option("--u1", a.u1, "Degree bound of the larger code")->required();
  sub->add_option("--u2", a.u2, "Degree bound of the smaller code, -1 for the zero code")->capture_default_str();
  if (with_rank) sub->add_option("--r", a.r, "Rank, or 'all'")->capture_default_str();
  sub->add_option("--subsets", a.subsets, "Explicit A_i as field encodings, e.g. 0,1;0,2,3");
  sub->add_option("--policy", a.policy, "Default subsets: first or last field elements")->capture_default_str();
  sub->add_flag("--oracle", a.oracle, "Also run a brute-force oracle");
  sub->add_option("--method", a.method, "Oracle: support, window or families")->capture_default_str();
  sub->add_option("--max-states", a.max_states, "Oracle state cap")->capture_default_str();
  sub->add_option("--time-cap", a.time_cap, "Oracle time cap in seconds")->capture_default_str();
  sub->add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

int cmd_hierarchy(const QueryArgs& a, std::ostream& out, std::ostream& err) {
  const Context ctx = make_context(a, err);
  const auto rs = requested_ranks(a, ctx);
  const OracleChoice choice = parse_oracle_choice(a.method);
  const OracleBudget budget = make_budget(a.max_states, a.time_cap);

  struct Row {
    WeightRecord rec;
    std::optional<std::uint64_t> oracle;
  };
  std::vector<Row> rows;
  bool mismatch = false;
  for (auto r : rs) {
    Row row{relative_weight({ctx.grid.shape(), ctx.band, r}), std::nullopt};
    if (a.oracle) {
      const auto res = run_oracle(ctx.grid, ctx.band, r, choice, budget);
      row.oracle = res.result.value;
      if (res.result.value != row.rec.M_r || !res.witness_ok) {
        mismatch = true;
        err << "MISMATCH r = " << r << ": formula " << row.rec.M_r << ", oracle " << res.result.value << ", "
            << render_witness(res.result) << '\n';
      }
    }
    rows.push_back(std::move(row));
  }

  if (a.format == "json") {
    json doc;
    doc["query"] = query_json(a, ctx);
    json results = json::array();
    for (const auto& row : rows) {
      json rec;
      rec["r"] = row.rec.r;
      rec["a_r"] = row.rec.a_r.coords;
      rec["s"] = row.rec.s;
      rec["M_r"] = row.rec.M_r;
      rec["max_zeros"] = row.rec.max_zeros;
      rec["oracle"] = row.oracle ? json(*row.oracle) : json(nullptr);
      results.push_back(rec);
    }
    doc["results"] = results;
    emit_json(out, doc);
  } else {
    std::vector<std::vector<std::string>> table{{"r", "a_r", "s", "M_r", "max_zeros", "oracle"}};
    for (const auto& row : rows) {
      table.push_back({std::to_string(row.rec.r), to_string(row.rec.a_r), std::to_string(row.rec.s),
                       std::to_string(row.rec.M_r), std::to_string(row.rec.max_zeros),
                       row.oracle ? std::to_string(*row.oracle) : (a.format == "csv" ? "" : "-")});
    }
    if (a.format == "csv") {
      emit_csv(out, table);
    } else {
      out << "GF(" << a.q << "), sizes (" << join(ctx.grid.shape().dims(), ",") << "), band (" << ctx.band.u2
          << "," << ctx.band.u1 << "], ell = " << ctx.ell << '\n';
      emit_table(out, table);
    }
  }
  return mismatch ? kMismatch : kOk;
}

int cmd_maximal(const QueryArgs& a, std::ostream& out, std::ostream& err) {
  const Context ctx = make_context(a, err);
  if (a.r == "all") fail(ErrorCode::RankOutOfRange, "maximal needs an explicit --r");
  const auto r = requested_ranks(a, ctx).front();
  const auto family = maximal_family(ctx.grid, ctx.band, r);
  const std::uint64_t zeros = common_zero_count(family, ctx.grid);
  std::vector<Vector> evaluations;
  for (const auto& f : family) evaluations.push_back(evaluate_on_grid(f, ctx.grid));
  const std::uint64_t support = support_of_span(evaluations).size();
  const WeightRecord rec = relative_weight({ctx.grid.shape(), ctx.band, r});
  std::optional<std::uint64_t> oracle;
  if (a.oracle) {
    const auto res = run_oracle(ctx.grid, ctx.band, r, parse_oracle_choice(a.method),
                                make_budget(a.max_states, a.time_cap));
    oracle = res.result.value;
  }
  const bool agree = support == rec.M_r && ctx.grid.size() - zeros == support && (!oracle || *oracle == rec.M_r);

  if (a.format == "json") {
    json doc;
    doc["query"] = query_json(a, ctx);
    json fam = json::array();
    for (std::uint64_t i = 0; i < family.size(); ++i) {
      json entry;
      entry["a"] = nth_band_element(ctx.grid.shape(), ctx.band, i + 1).coords;
      entry["polynomial"] = render(family[i]);
      fam.push_back(entry);
    }
    doc["family"] = fam;
    doc["zeros"] = zeros;
    doc["support"] = support;
    doc["formula"] = rec.M_r;
    doc["oracle"] = oracle ? json(*oracle) : json(nullptr);
    emit_json(out, doc);
  } else if (a.format == "csv") {
    emit_csv(out, {{"zeros", "support", "formula", "oracle"},
                   {std::to_string(zeros), std::to_string(support), std::to_string(rec.M_r),
                    oracle ? std::to_string(*oracle) : ""}});
  } else {
    for (std::uint64_t i = 0; i < family.size(); ++i) {
      out << "f_" << to_string(nth_band_element(ctx.grid.shape(), ctx.band, i + 1)) << " = " << render(family[i])
          << '\n';
    }
    out << "zeros " << zeros << '\n' << "support " << support << '\n' << "formula " << rec.M_r << '\n';
    if (oracle) out << "oracle " << *oracle << '\n';
  }
  if (!agree) err << "MISMATCH between family support and formula\n";
  return agree ? kOk : kMismatch;
}

struct GeneratorArgs {
  std::uint32_t q = 0;
  std::string sizes;
  int d = 0;
  std::string subsets;
  std::string policy = "first";
};

int cmd_generator(const GeneratorArgs& g, std::ostream& out, std::ostream& err) {
  QueryArgs a;
  a.q = g.q;
  a.sizes = g.sizes;
  a.subsets = g.subsets;
  a.policy = g.policy;
  const auto code = build_code(make_grid(a, err), g.d);
  write_generator_matrix(out, code);
  return kOk;
}

struct FootprintArgs {
  std::uint32_t q = 0;
  std::string sizes;
  std::uint64_t families = 1000;
  std::uint64_t seed = 1;
  std::uint64_t max_r = 3;
  std::uint64_t max_terms = 4;
  std::string format = "text";
};

int cmd_footprint(const FootprintArgs& f, std::ostream& out, std::ostream& err) {
  QueryArgs a;
  a.q = f.q;
  a.sizes = f.sizes;
  const auto grid = make_grid(a, err);
  if (f.max_r == 0 || f.max_terms == 0) fail(ErrorCode::InvalidArgument, "--max-r and --max-terms must be positive");
  const BoxShape& shape = grid.shape();
  const Field& field = grid.field();
  std::mt19937_64 rng(f.seed);
  std::uint64_t checked = 0, violations = 0, tight = 0;
  std::string first_violation;
  while (checked < f.families) {
    const std::uint64_t r = 1 + rng() % f.max_r;
    std::vector<MultiPoly> fam;
    std::vector<BoxPoint> lts;
    for (std::uint64_t i = 0; i < r; ++i) {
      MultiPoly g(shape, field);
      const std::uint64_t terms = 1 + rng() % f.max_terms;
      for (std::uint64_t t = 0; t < terms; ++t) {
        g.add_term(rng() % shape.n(), field.element(1 + static_cast<std::uint32_t>(rng() % (field.order() - 1))));
      }
      if (g.is_zero()) continue;
      lts.push_back(leading_term(g)->exponent);
      fam.push_back(std::move(g));
    }
    if (fam.empty()) continue;
    ++checked;
    const std::uint64_t zeros = common_zero_count(fam, grid);
    const std::uint64_t bound = footprint_count(shape, lts);
    if (zeros == bound) ++tight;
    if (zeros > bound && violations++ == 0) {
      for (const auto& g : fam) first_violation += (first_violation.empty() ? "" : "; ") + render(g);
    }
  }
  if (f.format == "json") {
    json doc;
    json q;
    q["q"] = f.q;
    q["sizes"] = shape.dims();
    q["seed"] = f.seed;
    q["families"] = f.families;
    q["max_r"] = f.max_r;
    q["max_terms"] = f.max_terms;
    doc["query"] = q;
    doc["checked"] = checked;
    doc["violations"] = violations;
    doc["tight"] = tight;
    emit_json(out, doc);
  } else {
    out << "seed " << f.seed << ", families " << checked << ", violations " << violations << ", tight " << tight
        << '\n';
  }
  if (violations > 0) err << "VIOLATION " << first_violation << '\n';
  return violations == 0 ? kOk : kMismatch;
}

struct VerifyArgs {
  std::string qs = "2,3,4";
  std::vector<std::string> shapes;
  std::uint64_t max_n = 9;
  std::string method = "support";
  std::string policy = "first";
  std::uint64_t max_states = OracleBudget{}.max_states;
  std::uint64_t time_cap = 300;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& v, std::ostream& out, const Hooks& hooks) {
  const auto qs = parse_list<std::uint32_t>(v.qs, "--q");
  std::vector<std::vector<int>> shapes;
  for (const auto& s : v.shapes) shapes.push_back(parse_list<int>(s, "--shape"));
  if (shapes.empty()) shapes = kDefaultShapes;
  const OracleChoice choice = parse_oracle_choice(v.method);
  const OracleBudget budget = make_budget(v.max_states, v.time_cap);
  const SubsetPolicy policy = parse_policy(v.policy);

  auto tuples = enumerate_grid(qs, shapes, v.max_n);
  std::vector<GridEntry> entries;
  std::uint64_t ok = 0, bad = 0, skipped = 0;
  for (auto& t : tuples) {
    t.policy = policy;
    entries.push_back(check_tuple(t, choice, budget, hooks));
    switch (entries.back().status) {
      case Status::ok: ++ok; break;
      case Status::mismatch: ++bad; break;
      case Status::skipped: ++skipped; break;
    }
  }

  if (v.format == "json") {
    json doc;
    json q;
    q["q"] = qs;
    q["shapes"] = shapes;
    q["max_n"] = v.max_n;
    q["method"] = v.method;
    q["policy"] = v.policy;
    q["max_states"] = v.max_states;
    q["time_cap_seconds"] = v.time_cap;
    doc["query"] = q;
    json results = json::array();
    for (const auto& e : entries) {
      json row;
      row["q"] = e.tuple.q;
      row["sizes"] = e.tuple.sizes;
      row["u1"] = e.tuple.u1;
      row["u2"] = e.tuple.u2;
      row["r"] = e.tuple.r;
      row["formula"] = e.formula;
      row["oracle"] = e.oracle ? json(*e.oracle) : json(nullptr);
      row["status"] = std::string(to_string(e.status));
      if (!e.witness.empty()) row["witness"] = e.witness;
      results.push_back(row);
    }
    doc["results"] = results;
    doc["summary"] = {{"ok", ok}, {"mismatch", bad}, {"skipped", skipped}};
    emit_json(out, doc);
  } else {
    std::vector<std::vector<std::string>> table{{"q", "sizes", "u1", "u2", "r", "formula", "oracle", "status"}};
    for (const auto& e : entries) {
      table.push_back({std::to_string(e.tuple.q), "(" + join(e.tuple.sizes, ",") + ")", std::to_string(e.tuple.u1),
                       std::to_string(e.tuple.u2), std::to_string(e.tuple.r), std::to_string(e.formula),
                       e.oracle ? std::to_string(*e.oracle) : (v.format == "csv" ? "" : "-"),
                       std::string(to_string(e.status))});
    }
    if (v.format == "csv") {
      emit_csv(out, table);
    } else {
      emit_table(out, table);
      for (const auto& e : entries) {
        if (e.status == Status::mismatch) {
          out << "witness for q=" << e.tuple.q << " sizes=(" << join(e.tuple.sizes, ",") << ") u1=" << e.tuple.u1
              << " u2=" << e.tuple.u2 << " r=" << e.tuple.r << ": " << e.witness << '\n';
        }
      }
      out << "total " << entries.size() << ", OK " << ok << ", MISMATCH " << bad << ", SKIPPED " << skipped << '\n';
    }
  }
  return bad == 0 ? kOk : kMismatch;
}

}  // namespace

std::string_view to_string(OracleChoice choice) noexcept {
  switch (choice) {
    case OracleChoice::support: return "support";
    case OracleChoice::window: return "window";
    case OracleChoice::families: return "families";
  }
  return "support";
}

OracleChoice parse_oracle_choice(std::string_view name) {
  if (name == "support") return OracleChoice::support;
  if (name == "window") return OracleChoice::window;
  if (name == "families") return OracleChoice::families;
  fail(ErrorCode::InvalidArgument, "oracle method must be support, window or families, got '" + std::string(name) + "'");
}

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::ok: return "OK";
    case Status::mismatch: return "MISMATCH";
    case Status::skipped: return "SKIPPED";
  }
  return "SKIPPED";
}

std::vector<GridTuple> enumerate_grid(const std::vector<std::uint32_t>& qs,
                                      const std::vector<std::vector<int>>& shapes, std::uint64_t max_n) {
  std::vector<GridTuple> out;
  for (auto q : qs) {
    for (const auto& sizes : shapes) {
      const BoxShape shape(sizes);
      if (shape.dims().back() > static_cast<int>(q) || shape.n() > max_n) continue;
      for (int u1 = 0; u1 <= shape.k(); ++u1) {
        for (int u2 = -1; u2 < u1; ++u2) {
          const std::uint64_t ell = band_size(shape, DegreeBand(u2, u1));
          for (std::uint64_t r = 1; r <= ell; ++r) out.push_back({q, sizes, u1, u2, r, SubsetPolicy::first_elements});
        }
      }
    }
  }
  return out;
}

GridEntry check_tuple(const GridTuple& tuple, OracleChoice oracle, const OracleBudget& budget, const Hooks& hooks) {
  const Field field(tuple.q);
  const auto grid = build_grid(field, tuple.sizes, tuple.policy);
  const DegreeBand band(tuple.u2, tuple.u1);
  const WeightQuery query{grid.shape(), band, tuple.r};
  GridEntry e;
  e.tuple = tuple;
  e.formula = hooks.formula ? hooks.formula(query) : relative_weight(query).M_r;
  try {
    const auto res = run_oracle(grid, band, tuple.r, oracle, budget);
    e.oracle = res.result.value;
    e.states_explored = res.result.states_explored;
    e.status = res.witness_ok && res.result.value == e.formula ? Status::ok : Status::mismatch;
    if (e.status == Status::mismatch) {
      e.witness = render_witness(res.result) + (res.witness_ok ? "" : " (witness failed its re-check)");
    }
  } catch (const BudgetExceeded& ex) {
    e.status = Status::skipped;
    e.states_explored = ex.states_explored();
  }
  return e;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Relative generalized Hamming weights of affine Cartesian codes", "rghw"};
  app.require_subcommand(1);

  QueryArgs hier, maxi;
  auto* h = app.add_subcommand("hierarchy", "RGHWs M_1..M_ell of AC(u1) relative to AC(u2)");
  add_query_options(h, hier, true);
  auto* mx = app.add_subcommand("maximal", "Maximal polynomial family attaining M_r");
  add_query_options(mx, maxi, true);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Formula against an oracle over a parameter grid");
  v->add_option("--q", ver.qs, "Field orders, comma separated")->capture_default_str();
  v->add_option("--shape", ver.shapes, "Box shape such as 2,3; repeatable");
  v->add_option("--max-n", ver.max_n, "Largest grid size n to include")->capture_default_str();
  v->add_option("--method", ver.method, "Oracle: support, window or families")->capture_default_str();
  v->add_option("--policy", ver.policy, "Subsets: first or last field elements")->capture_default_str();
  v->add_option("--max-states", ver.max_states, "Oracle state cap per tuple")->capture_default_str();
  v->add_option("--time-cap", ver.time_cap, "Oracle time cap per tuple in seconds")->capture_default_str();
  v->add_option("--format", ver.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  GeneratorArgs gen;
  auto* g = app.add_subcommand("generator", "Generator matrix of AC(d), one row per line");
  g->add_option("--q", gen.q, "Field order")->required();
  g->add_option("--sizes", gen.sizes, "Subset sizes d_1,...,d_m")->required();
  g->add_option("--d", gen.d, "Degree bound")->required();
  g->add_option("--subsets", gen.subsets, "Explicit A_i as field encodings");
  g->add_option("--policy", gen.policy, "Default subsets: first or last")->capture_default_str();

  FootprintArgs fp;
  auto* f = app.add_subcommand("footprint", "Check the footprint bound on seeded random families");
  f->add_option("--q", fp.q, "Field order")->required();
  f->add_option("--sizes", fp.sizes, "Subset sizes d_1,...,d_m")->required();
  f->add_option("--families", fp.families, "Number of families")->capture_default_str();
  f->add_option("--seed", fp.seed, "RNG seed")->capture_default_str();
  f->add_option("--max-r", fp.max_r, "Largest family size")->capture_default_str();
  f->add_option("--max-terms", fp.max_terms, "Largest number of terms per polynomial")->capture_default_str();
  f->add_option("--format", fp.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (h->parsed()) return cmd_hierarchy(hier, out, err);
    if (mx->parsed()) return cmd_maximal(maxi, out, err);
    if (v->parsed()) return cmd_verify(ver, out, hooks);
    if (g->parsed()) return cmd_generator(gen, out, err);
    if (f->parsed()) return cmd_footprint(fp, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded after " << e.states_explored() << " states: " << e.what() << '\n';
    return kBudgetExceeded;
  }
  return kInvalidInput;
}

}  // namespace rghw::cli
