#include "app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "fuzzytorus/bimodule.hpp"
#include "fuzzytorus/error.hpp"
#include "fuzzytorus/laplace.hpp"
#include "fuzzytorus/oracle.hpp"
#include "fuzzytorus/spincover.hpp"

namespace fuzzytorus::cli {

namespace {

using nlohmann::json;

constexpr int kMaxDiracOracleN = 16;
constexpr int kMaxLaplaceOracleN = 32;

struct ConfigError : Error {
  using Error::Error;
};

[[noreturn]] void config_fail(const std::string& what) { throw ConfigError(ErrorKind::InvalidArgument, what); }

double clean(double v) { return v == 0.0 ? 0.0 : v; }

std::string format_label(long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  const long whole = std::abs(doubled) / 2;
  return std::string(doubled < 0 ? "-" : "") + std::to_string(whole) + ".5";
}

std::vector<long> split_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) config_fail("not an integer: '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      config_fail("not an integer: '" + item + "'");
    }
  }
  return out;
}

Branch parse_branch(const std::string& text) {
  if (text == "+" || text == "+1" || text == "plus" || text == "1") return Branch::Plus;
  if (text == "-" || text == "-1" || text == "minus") return Branch::Minus;
  config_fail("branch must be + or -, got '" + text + "'");
}

Command parse_command(const std::string& name) {
  static const std::map<std::string, Command> table{
      {"spectrum", Command::Spectrum}, {"laplace", Command::Laplace},        {"verify", Command::Verify},
      {"oracle-compare", Command::OracleCompare}, {"sectors", Command::Sectors}, {"figure", Command::Figure}};
  return table.at(name);
}

std::string bits_string(SpinStructure s) { return std::to_string(s[0]) + "," + std::to_string(s[1]); }

json metric_json(const IntegerMetric& m) { return json::array({m.a, m.b, m.c, m.d}); }

json comparison_json(const SpectrumComparison& c) {
  json groups = json::array();
  for (const auto& g : c.multiplicity_table) groups.push_back({{"value", clean(g.value)}, {"count", g.count}});
  return {{"computed_size", c.computed.size()},
          {"reference_size", c.reference.size()},
          {"max_abs_gap", c.max_abs_gap},
          {"tolerance", c.tolerance},
          {"verdict", c.verdict()},
          {"pass", c.pass},
          {"multiplicity_table", groups}};
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

// Validated inputs shared by the commands.
struct Prepared {
  RootOfUnity root;
  IntegerMetric metric;
  SpinStructure sigma;
};

Prepared prepare(const RunConfig& c) {
  if (c.n < 1) config_fail("--n must be positive");
  if (c.format != "csv" && c.format != "json") config_fail("--format must be csv or json");
  if (c.bin_width <= 0.0) config_fail("--bin-width must be positive");
  if (c.window && *c.window < 1) config_fail("--window must be positive");
  if (c.count < 1) config_fail("--count must be positive");
  const RootOfUnity root = config_root(c);
  IntegerMetric metric = c.normalize ? hermite_normal_form(c.metric) : c.metric;
  if (metric.det() == 0) throw ConfigError(ErrorKind::DegenerateMetric, "metric " + metric.to_string() + " is singular");
  const SpinStructure sc = canonical_spin_structure(metric);
  return {root, metric, c.sigma.value_or(sc)};
}

void require_nondegenerate(const IntegerMetric& metric, int order) {
  if (metric.det() % order == 0) {
    throw ConfigError(ErrorKind::DegenerateDeformation, "N = " + std::to_string(order) + " divides det " +
                                                            metric.to_string() + ": Xi = 1");
  }
}

void sort_records(std::vector<DiracSpectrumRecord>& records) {
  std::sort(records.begin(), records.end(), [](const auto& x, const auto& y) {
    return std::tie(x.tk, x.tl, x.sign) < std::tie(y.tk, y.tl, y.sign);
  });
}

// Sorted pairing of the expanded records against computed eigenvalues; each
// record receives the largest gap among its copies.
std::vector<double> record_gaps(const std::vector<DiracSpectrumRecord>& records, const std::vector<double>& eigs) {
  std::vector<std::pair<double, std::size_t>> expanded;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (int m = 0; m < records[i].multiplicity; ++m) expanded.emplace_back(records[i].eigenvalue, i);
  }
  std::stable_sort(expanded.begin(), expanded.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<double> gaps(records.size(), 0.0);
  const std::size_t n = std::min(expanded.size(), eigs.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto& g = gaps[expanded[i].second];
    g = std::max(g, std::abs(expanded[i].first - eigs[i]));
  }
  return gaps;
}

void write_dirac_csv(std::ostream& out, const std::vector<DiracSpectrumRecord>& records,
                     const std::vector<double>* gaps) {
  out << "k,l,sign,eigenvalue,multiplicity,sigma1,sigma2";
  if (gaps) out << ",oracle_gap";
  out << '\n';
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << format_label(r.tk) << ',' << format_label(r.tl) << ',' << r.sign << ',' << format_number(r.eigenvalue)
        << ',' << r.multiplicity << ',' << r.sigma[0] << ',' << r.sigma[1];
    if (gaps) out << ',' << format_number((*gaps)[i]);
    out << '\n';
  }
}

json dirac_records_json(const std::vector<DiracSpectrumRecord>& records, const std::vector<double>* gaps) {
  json rows = json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    json row{{"k", r.k()},         {"l", r.l()},
             {"sign", r.sign},     {"eigenvalue", clean(r.eigenvalue)},
             {"multiplicity", r.multiplicity}, {"sigma", {r.sigma[0], r.sigma[1]}}};
    if (gaps) row["oracle_gap"] = (*gaps)[i];
    rows.push_back(row);
  }
  return rows;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const Prepared p = prepare(c);
  require_nondegenerate(p.metric, c.n);
  const SpinStructure sc = canonical_spin_structure(p.metric);
  if (p.sigma != sc) {
    throw ConfigError(ErrorKind::WrongSpinStructure,
                      "sigma " + bits_string(p.sigma) + " differs from sigma_c " + bits_string(sc) +
                          "; use the sectors command for other spin structures");
  }
  if (c.oracle && c.n > kMaxDiracOracleN) {
    config_fail("--oracle diagonalises a dense 4N^2 matrix; N must be at most " + std::to_string(kMaxDiracOracleN));
  }
  auto records = dirac_spectrum_formula(p.metric, c.n, p.root, p.sigma);
  sort_records(records);

  std::vector<double> gaps;
  std::optional<SpectrumComparison> cmp;
  if (c.oracle) {
    const FuzzyTorus torus = clock_shift_torus(p.root);
    const auto eigs = hermitian_eigs(dirac_operator(derived_pair(torus, p.metric)));
    cmp = multiset_match(eigs, expand_spectrum(records), c.tolerance);
    gaps = record_gaps(records, cmp->computed);
  }
  if (c.format == "json") {
    json doc{{"n", c.n}, {"k", p.root.numerator()}, {"metric", metric_json(p.metric)},
             {"records", dirac_records_json(records, c.oracle ? &gaps : nullptr)}};
    if (cmp) doc["oracle"] = comparison_json(*cmp);
    out << doc.dump(2) << '\n';
  } else {
    write_dirac_csv(out, records, c.oracle ? &gaps : nullptr);
  }
  return cmp && !cmp->pass ? kVerifyFailure : kOk;
}

int cmd_laplace(const RunConfig& c, std::ostream& out) {
  const Prepared p = prepare(c);
  require_nondegenerate(p.metric, c.n);
  if (c.chi && c.n % 2 != 0) throw ConfigError(ErrorKind::OddDimension, "--chi needs even N");
  if (c.oracle && c.n > kMaxLaplaceOracleN) {
    config_fail("--oracle diagonalises a dense N^2 matrix; N must be at most " + std::to_string(kMaxLaplaceOracleN));
  }
  auto records = laplace_spectrum_formula(p.metric, c.n, p.root);
  if (c.chi) {
    std::erase_if(records, [&](const LaplaceSpectrumRecord& r) { return r.sector != *c.chi; });
  }
  std::optional<SpectrumComparison> cmp;
  if (c.oracle) {
    const FuzzyTorus torus = clock_shift_torus(p.root);
    const DerivedPair pair = derived_pair(torus, p.metric);
    Matrix lap = laplacian_superop(pair);
    if (c.chi) {
      const Matrix iso = sector_isometry(c.n, (*c.chi)[0], (*c.chi)[1]);
      lap = iso.adjoint() * lap * iso;
    }
    std::vector<double> reference;
    for (const auto& r : records) reference.push_back(r.eigenvalue);
    cmp = multiset_match(hermitian_eigs(lap), reference, c.tolerance);
  }
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& r : records) {
      json row{{"k", r.k}, {"l", r.l}, {"eigenvalue", clean(r.eigenvalue)}};
      if (r.sector) row["sector"] = {(*r.sector)[0], (*r.sector)[1]};
      rows.push_back(row);
    }
    json doc{{"n", c.n}, {"k", p.root.numerator()}, {"metric", metric_json(p.metric)}, {"records", rows}};
    if (cmp) doc["oracle"] = comparison_json(*cmp);
    out << doc.dump(2) << '\n';
  } else {
    out << "k,l,eigenvalue,h,j\n";
    for (const auto& r : records) {
      out << r.k << ',' << r.l << ',' << format_number(r.eigenvalue) << ',';
      if (r.sector) out << (*r.sector)[0] << ',' << (*r.sector)[1];
      else out << ',';
      out << '\n';
    }
  }
  return cmp && !cmp->pass ? kVerifyFailure : kOk;
}

json report_json(const AxiomReport& report) {
  json checks = json::array();
  for (const auto& ch : report.checks) {
    checks.push_back({{"name", ch.name}, {"violation", ch.violation}, {"pass", ch.pass}});
  }
  return {{"tolerance", report.tolerance},
          {"basis_size", report.basis_size},
          {"checks", checks},
          {"pass", report.all_pass()}};
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const Prepared p = prepare(c);
  if (c.n > kMaxDiracOracleN) config_fail("verify assembles dense 4N^2 operators; N must be at most 16");
  json doc{{"n", c.n}, {"k", p.root.numerator()}, {"metric", metric_json(p.metric)}};
  AxiomReport report;
  const double rel_tol = c.tolerance * 0.1;
  if (c.chi) {
    if (c.n % 4 != 0) throw ConfigError(ErrorKind::OrderMismatch, "--chi needs N divisible by 4");
    require_nondegenerate(p.metric, c.n / 4);
    const FuzzyCover cover = build_cover(c.n / 4, p.root);
    const SectorTriple sector = sector_triple(cover, *c.chi, p.metric);
    report = verify_axioms(sector.triple, 0, rel_tol);
    doc["chi"] = {(*c.chi)[0], (*c.chi)[1]};
    doc["sigma"] = {sector.label.sigma[0], sector.label.sigma[1]};
    doc["dim"] = sector.triple.hilbert_dim;
  } else {
    require_nondegenerate(p.metric, c.n);
    const SpectralTriple triple = assemble_triple(clock_shift_torus(p.root), p.metric);
    report = verify_axioms(triple, 0, rel_tol);
    doc["sigma"] = {triple.sigma[0], triple.sigma[1]};
    doc["dim"] = triple.hilbert_dim;
  }
  doc["ko_dimension"] = 4;
  doc["report"] = report_json(report);
  doc["pass"] = report.all_pass();
  out << doc.dump(2) << '\n';
  return report.all_pass() ? kOk : kVerifyFailure;
}

int cmd_oracle_compare(const RunConfig& c, std::ostream& out) {
  const Prepared p = prepare(c);
  require_nondegenerate(p.metric, c.n);
  const FuzzyTorus torus = clock_shift_torus(p.root);
  const DerivedPair pair = derived_pair(torus, p.metric);
  SpectrumComparison cmp;
  if (c.op == "dirac") {
    if (c.n > kMaxDiracOracleN) config_fail("N must be at most 16 for the Dirac oracle");
    const auto records = dirac_spectrum_formula(p.metric, c.n, p.root, canonical_spin_structure(p.metric));
    cmp = multiset_match(hermitian_eigs(dirac_operator(pair)), expand_spectrum(records), c.tolerance);
  } else if (c.op == "laplace") {
    if (c.n > kMaxLaplaceOracleN) config_fail("N must be at most 32 for the Laplace oracle");
    std::vector<double> reference;
    for (const auto& r : laplace_spectrum_formula(p.metric, c.n, p.root)) reference.push_back(r.eigenvalue);
    cmp = multiset_match(hermitian_eigs(laplacian_superop(pair)), reference, c.tolerance);
  } else {
    config_fail("--operator must be dirac or laplace");
  }
  json doc{{"n", c.n}, {"k", p.root.numerator()}, {"metric", metric_json(p.metric)}, {"operator", c.op},
           {"comparison", comparison_json(cmp)}, {"pass", cmp.pass}};
  out << doc.dump(2) << '\n';
  return cmp.pass ? kOk : kVerifyFailure;
}

int cmd_sectors(const RunConfig& c, std::ostream& out) {
  const Prepared p = prepare(c);
  if (c.n % 4 != 0) throw ConfigError(ErrorKind::OrderMismatch, "sectors need N = 4 N'");
  if (c.n > kMaxDiracOracleN) config_fail("sectors diagonalise dense operators; N must be at most 16");
  require_nondegenerate(p.metric, c.n / 4);
  const FuzzyCover cover = build_cover(c.n / 4, p.root);
  const CoverAnalysis analysis = analyze_cover(cover, p.metric, c.tolerance);

  bool pass = analysis.partition.pass;
  json sectors = json::array();
  for (const auto& s : analysis.sectors) {
    pass = pass && s.conjecture.pass;
    sectors.push_back({{"chi", {s.label.character[0], s.label.character[1]}},
                       {"sigma", {s.label.sigma[0], s.label.sigma[1]}},
                       {"dim", s.eigenvalues.size()},
                       {"kernel_dim", s.kernel_dim},
                       {"leak", s.leak},
                       {"conjecture", comparison_json(s.conjecture)}});
  }
  json summary{{"n", c.n},
               {"nprime", cover.nprime},
               {"k", p.root.numerator()},
               {"metric", metric_json(p.metric)},
               {"canonical_sigma", bits_string(canonical_spin_structure(p.metric))},
               {"partition", comparison_json(analysis.partition)},
               {"sectors", sectors},
               {"pass", pass}};
  for (auto& s : summary["sectors"]) s["conjecture"].erase("multiplicity_table");
  summary["partition"].erase("multiplicity_table");

  if (!c.out.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(c.out);
    for (const auto& s : analysis.sectors) {
      auto records = s.formula;
      sort_records(records);
      const auto gaps = record_gaps(records, s.eigenvalues);
      std::ofstream file(fs::path(c.out) / ("sector_" + std::to_string(s.label.character[0]) +
                                             std::to_string(s.label.character[1]) + ".csv"));
      write_dirac_csv(file, records, &gaps);
    }
    std::ofstream(fs::path(c.out) / "summary.json") << summary.dump(2) << '\n';
  }
  if (c.format == "json" || !c.out.empty()) {
    out << summary.dump(2) << '\n';
  } else {
    out << "chi1,chi2,k,l,sign,eigenvalue,multiplicity,sigma1,sigma2\n";
    for (const auto& s : analysis.sectors) {
      auto records = s.formula;
      sort_records(records);
      for (const auto& r : records) {
        out << s.label.character[0] << ',' << s.label.character[1] << ',' << format_label(r.tk) << ','
            << format_label(r.tl) << ',' << r.sign << ',' << format_number(r.eigenvalue) << ','
            << r.multiplicity << ',' << r.sigma[0] << ',' << r.sigma[1] << '\n';
      }
    }
  }
  return pass ? kOk : kVerifyFailure;
}

// Positive branch of every label: one eigenvalue per label.
std::vector<DiracSpectrumRecord> positive_branch(std::vector<DiracSpectrumRecord> records) {
  std::erase_if(records, [](const DiracSpectrumRecord& r) { return r.sign < 0; });
  sort_records(records);
  return records;
}

std::vector<double> absolute_sorted(const std::vector<DiracSpectrumRecord>& records) {
  std::vector<double> v = expand_spectrum(records);
  for (double& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end());
  return v;
}

// Counts positive eigenvalues (zero modes contribute half their multiplicity).
std::vector<double> histogram(const std::vector<DiracSpectrumRecord>& records, double width, std::size_t bins) {
  std::vector<double> counts(bins, 0.0);
  for (const auto& r : records) {
    if (r.sign < 0) continue;
    const auto bin = static_cast<std::size_t>(std::floor(r.eigenvalue / width));
    if (bin >= bins) continue;
    counts[bin] += r.sign == 0 ? r.multiplicity / 2.0 : r.multiplicity;
  }
  return counts;
}

int cmd_figure(const RunConfig& c, std::ostream& out) {
  const Prepared p = prepare(c);
  if (c.figure == "mult") {
    require_nondegenerate(p.metric, c.n);
    std::vector<double> values;
    for (const auto& r : laplace_spectrum_formula(p.metric, c.n, p.root)) values.push_back(r.eigenvalue);
    std::sort(values.begin(), values.end());
    out << "eigenvalue,multiplicity\n";
    for (const auto& g : group_multiplicities(values)) out << format_number(g.value) << ',' << g.count << '\n';
    return kOk;
  }
  require_nondegenerate(p.metric, c.n);
  const SpinStructure sc = canonical_spin_structure(p.metric);
  const auto records = dirac_spectrum_formula(p.metric, c.n, p.root, sc);
  const int window = c.window.value_or(c.n);
  if (c.figure == "surface" || c.figure == "contour") {
    const auto positive = positive_branch(records);
    std::vector<MultiplicityGroup> groups;
    if (c.figure == "contour") groups = group_multiplicities(expand_spectrum(positive));
    out << (c.figure == "surface" ? "k,l,eigenvalue\n" : "k,l,eigenvalue,multiplicity\n");
    for (const auto& r : positive) {
      out << format_label(r.tk) << ',' << format_label(r.tl) << ',' << format_number(r.eigenvalue);
      if (c.figure == "contour") {
        const auto it = std::find_if(groups.begin(), groups.end(), [&](const MultiplicityGroup& g) {
          return std::abs(r.eigenvalue - g.value) <= 1e-8 * (1.0 + std::abs(r.eigenvalue));
        });
        out << ',' << (it == groups.end() ? 0 : it->count);
      }
      out << '\n';
    }
    return kOk;
  }
  const auto commutative = commutative_dirac_spectrum(p.metric, sc, window);
  if (c.figure == "compare") {
    const auto fuzzy = absolute_sorted(records);
    const auto flat = absolute_sorted(commutative);
    const std::size_t rows = std::min({static_cast<std::size_t>(c.count), fuzzy.size(), flat.size()});
    out << "rank,fuzzy,commutative\n";
    for (std::size_t i = 0; i < rows; ++i) {
      out << i << ',' << format_number(fuzzy[i]) << ',' << format_number(flat[i]) << '\n';
    }
    return kOk;
  }
  if (c.figure == "hist") {
    double top = 0.0;
    for (const auto& r : records) top = std::max(top, r.eigenvalue);
    const auto bins = static_cast<std::size_t>(std::floor(top / c.bin_width)) + 1;
    const auto fuzzy = histogram(records, c.bin_width, bins);
    const auto flat = histogram(commutative, c.bin_width, bins);
    out << "bin_lo,bin_hi,fuzzy,commutative\n";
    for (std::size_t i = 0; i < bins; ++i) {
      out << format_number(i * c.bin_width) << ',' << format_number((i + 1) * c.bin_width) << ','
          << format_number(fuzzy[i]) << ',' << format_number(flat[i]) << '\n';
    }
    return kOk;
  }
  config_fail("--fig must be one of surface, contour, compare, hist, mult");
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", clean(value));
  return buf;
}

IntegerMetric parse_metric(const std::string& text) {
  const auto v = split_longs(text);
  if (v.size() == 4) return {v[0], v[1], v[2], v[3]};
  if (v.size() == 3) return {v[0], 0, v[1], v[2]};
  config_fail("--metric needs a,b,c,d or a,c,d; got '" + text + "'");
}

SpinStructure parse_bits(const std::string& text) {
  const auto v = split_longs(text);
  if (v.size() != 2 || (v[0] != 0 && v[0] != 1) || (v[1] != 0 && v[1] != 1)) {
    config_fail("expected two bits h,j; got '" + text + "'");
  }
  return {static_cast<int>(v[0]), static_cast<int>(v[1])};
}

RootOfUnity config_root(const RunConfig& c) {
  if (!c.half_branch_given) {
    const RootOfUnity base = default_root(c.n, c.k);
    return make_root(c.n, c.k, base.half_branch(), c.quarter_branch);
  }
  return make_root(c.n, c.k, c.half_branch, c.quarter_branch);
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"Finite spectral triples for fuzzy tori"};
  app.require_subcommand(1);

  std::string half, quarter, metric, sigma, chi;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"spectrum", "Dirac spectrum from the label formula"},
      {"laplace", "Laplace spectrum from the label formula"},
      {"verify", "Real spectral triple axiom report"},
      {"oracle-compare", "Formula against dense diagonalisation"},
      {"sectors", "Spin-structure sectors of the four-fold cover"},
      {"figure", "Plot-ready data"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--n", config.n, "Order N of the root")->capture_default_str();
    sub->add_option("--k", config.k, "Numerator K, q = exp(2 pi i K / N)")->capture_default_str();
    sub->add_option("--half-branch", half, "Branch of q^{1/2}: + or -");
    sub->add_option("--quarter-branch", quarter, "Branch of q^{1/4}: + or -");
    sub->add_option("--metric", metric, "a,b,c,d or Hermite triple a,c,d");
    sub->add_flag("--normalize", config.normalize, "Reduce the metric to Hermite normal form");
    sub->add_option("--sigma", sigma, "Spin structure bits h,j");
    sub->add_option("--chi", chi, "Sector character bits h,j");
    sub->add_option("--window", config.window, "Label window for commutative references");
    sub->add_option("--bin-width", config.bin_width, "Histogram bin width")->capture_default_str();
    sub->add_option("--count", config.count, "Rows for the compare figure")->capture_default_str();
    sub->add_option("--format", config.format, "csv or json")->capture_default_str();
    sub->add_flag("--oracle", config.oracle, "Cross-check against diagonalisation");
    sub->add_option("--out", config.out, "Output directory for sector files");
    sub->add_option("--fig", config.figure, "surface, contour, compare, hist or mult")->capture_default_str();
    sub->add_option("--operator", config.op, "dirac or laplace")->capture_default_str();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);

  config.command = parse_command(app.get_subcommands().front()->get_name());
  if (!half.empty()) {
    config.half_branch = parse_branch(half);
    config.half_branch_given = true;
  }
  if (!quarter.empty()) config.quarter_branch = parse_branch(quarter);
  if (!metric.empty()) config.metric = parse_metric(metric);
  if (!sigma.empty()) config.sigma = parse_bits(sigma);
  if (!chi.empty()) config.chi = parse_bits(chi);
  if (const char* tol = std::getenv("FUZZY_TORUS_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(tol, &end);
    if (end == tol || *end != '\0' || !(v > 0.0)) config_fail("FUZZY_TORUS_TOL must be a positive number");
    config.tolerance = v;
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Spectrum: return cmd_spectrum(config, out);
      case Command::Laplace: return cmd_laplace(config, out);
      case Command::Verify: return cmd_verify(config, out);
      case Command::OracleCompare: return cmd_oracle_compare(config, out);
      case Command::Sectors: return cmd_sectors(config, out);
      case Command::Figure: return cmd_figure(config, out);
    }
  } catch (const ConfigError& e) {
    write_error(err, std::string(to_string(e.kind())), e.what());
    return kConfigError;
  } catch (const Error& e) {
    // Root and metric construction errors are configuration errors.
    const ErrorKind k = e.kind();
    const bool config = k == ErrorKind::NotCoprime || k == ErrorKind::NonPositiveOrder ||
                        k == ErrorKind::DegenerateMetric || k == ErrorKind::InvalidArgument;
    write_error(err, std::string(to_string(k)), e.what());
    return config ? kConfigError : kComputeError;
  } catch (const std::exception& e) {
    write_error(err, "InternalError", e.what());
    return kComputeError;
  }
  return kComputeError;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const CLI::CallForHelp&) {
    out << "usage: fuzzytorus <spectrum|laplace|verify|oracle-compare|sectors|figure> [options]\n"
           "options: --n --k --half-branch --quarter-branch --metric --normalize --sigma --chi\n"
           "         --window --bin-width --count --format --oracle --out --fig --operator\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "ConfigError", e.what());
    return kConfigError;
  } catch (const Error& e) {
    write_error(err, std::string(to_string(e.kind())), e.what());
    return kConfigError;
  }
  return run(config, out, err);
}

}  // namespace fuzzytorus::cli
