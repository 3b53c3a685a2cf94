// Command line front end. Subcommands cover the exact dimension formulas,
// bounded weight enumeration, fixed-subspace dimensions, harmonic polynomial
// dimensions, the classification runs, and the numerical embedding check.
//
// Output is a plain table by default; --json emits a stable envelope
// {"command", "parameters", "results", "tool_version"} (plus "seed" for
// seeded commands) and --csv a small header+rows table. Representation
// dimensions are serialized as decimal strings because they overflow 64-bit
// integers long before the formulas become slow.
//
// Exit codes: 0 success (and verdict match), 1 verification failure or
// internal inconsistency, 2 usage or domain error, 3 resource limit.

#include <flagdim/flagdim.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace flagdim;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kToolVersion = "1.0.0";

enum class OutputMode { Plain, Json, Csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CoordVec parse_coords(const std::string& text) {
  CoordVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad weight coordinate '" + item + "' in '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty weight coordinate list");
  return out;
}

std::vector<int> parse_blocks(const std::string& text) {
  std::vector<int> out;
  for (Coord c : parse_coords(text)) out.push_back(static_cast<int>(c));
  return out;
}

RatVec parse_rationals(const std::string& text) {
  RatVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.emplace_back(item);
    } catch (const std::exception&) {
      throw UsageError("bad rational '" + item + "' in '" + text + "'");
    }
  }
  return out;
}

Family parse_family(std::string name) {
  for (auto& ch : name) ch = static_cast<char>(std::toupper(ch));
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "D") return Family::D;
  throw UsageError("unknown family '" + name + "' (expected A, B, or D)");
}

GroupKind parse_group(std::string name) {
  for (auto& ch : name) ch = static_cast<char>(std::toupper(ch));
  if (name == "SO") return GroupKind::SO;
  if (name == "SU") return GroupKind::SU;
  throw UsageError("unknown group '" + name + "' (expected SO or SU)");
}

Field parse_field(std::string name) {
  for (auto& ch : name) ch = static_cast<char>(std::tolower(ch));
  if (name == "real") return Field::Real;
  if (name == "complex") return Field::Complex;
  throw UsageError("unknown field '" + name + "' (expected real or complex)");
}

Int mult_ceiling_from_env() {
  const char* raw = std::getenv("FLAGDIM_DIM_CEILING");
  if (raw == nullptr) return default_mult_ceiling();
  try {
    const Int value{std::string(raw)};
    if (value <= 0) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("bad FLAGDIM_DIM_CEILING value '") + raw + "'");
  }
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

ordered_json coords_json(const CoordVec& mu) {
  ordered_json arr = ordered_json::array();
  for (Coord c : mu) arr.push_back(static_cast<long long>(c));
  return arr;
}

std::string csv_weight(const CoordVec& mu) {
  std::string s = "\"";
  for (size_t i = 0; i < mu.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(mu[i]);
  }
  s += '"';
  return s;
}

struct Output {
  OutputMode mode = OutputMode::Plain;
  std::string out_path;

  void emit(const std::string& command, const ordered_json& parameters,
            const ordered_json& results, const std::string& plain,
            const std::string& csv,
            std::optional<std::uint64_t> seed = std::nullopt) const {
    std::string text;
    if (mode == OutputMode::Json) {
      ordered_json envelope;
      envelope["command"] = command;
      envelope["parameters"] = parameters;
      envelope["results"] = results;
      envelope["tool_version"] = kToolVersion;
      if (seed) envelope["seed"] = *seed;
      text = envelope.dump(2) + "\n";
    } else if (mode == OutputMode::Csv) {
      text = csv;
    } else {
      text = plain;
    }
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + out_path + "'");
      file << text;
    }
  }
};

// ---- dim ----

int run_dim(const Output& out, const std::string& family, int rank,
            const std::string& coords) {
  const Family f = parse_family(family);
  const auto mu = parse_coords(coords);
  const RootSystem rs(f, rank);
  const Int dim = dim_weight(rs.make_weight(mu));

  ordered_json params;
  params["family"] = std::string(1, family_letter(f));
  params["rank"] = rank;
  params["weight"] = coords_json(mu);
  ordered_json results;
  results["dimension"] = dim.str();

  out.emit("dim", params, results, dim.str() + "\n",
           "dimension\n" + dim.str() + "\n");
  return 0;
}

// ---- enum ----

int run_enum(const Output& out, const std::string& family, int rank,
             long long bound) {
  const Family f = parse_family(family);
  if (bound < 1) throw UsageError("bound must be positive");
  auto weights = enumerate_weights(f, rank, Int(bound));
  std::sort(weights.begin(), weights.end(),
            [](const EnumeratedWeight& a, const EnumeratedWeight& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.mu < b.mu;
            });

  ordered_json params;
  params["family"] = std::string(1, family_letter(f));
  params["rank"] = rank;
  params["bound"] = bound;
  ordered_json rows = ordered_json::array();
  std::string plain, csv = "weight,dimension\n";
  for (const auto& ew : weights) {
    ordered_json row;
    row["weight"] = coords_json(ew.mu);
    row["dimension"] = ew.dim.str();
    rows.push_back(row);
    plain += format_coords(ew.mu) + " " + ew.dim.str() + "\n";
    csv += csv_weight(ew.mu) + "," + ew.dim.str() + "\n";
  }
  ordered_json results;
  results["count"] = weights.size();
  results["weights"] = rows;

  out.emit("enum", params, results, plain, csv);
  return 0;
}

// ---- fixdim ----

int run_fixdim(const Output& out, const std::string& group, int n,
               const std::string& coords) {
  const GroupKind kind = parse_group(group);
  const auto mu = parse_coords(coords);
  const Int ceiling = mult_ceiling_from_env();
  const Int fixed = kind == GroupKind::SO ? fixed_subspace_dim_so(n, mu, ceiling)
                                          : fixed_subspace_dim_su(n, mu, ceiling);

  ordered_json params;
  params["group"] = group_name(kind, n);
  params["weight"] = coords_json(mu);
  ordered_json results;
  results["fixed_dimension"] = fixed.str();

  out.emit("fixdim", params, results, fixed.str() + "\n",
           "fixed_dimension\n" + fixed.str() + "\n");
  return 0;
}

// ---- harmonic ----

int run_harmonic(const Output& out, int degree) {
  const long long dim = harmonic_dim(degree);
  const long long fixed = harmonic_fixed_dim(degree);

  ordered_json params;
  params["degree"] = degree;
  ordered_json results;
  results["dimension"] = std::to_string(dim);
  results["fixed_dimension"] = std::to_string(fixed);

  std::string plain = "dimension " + std::to_string(dim) + "\nfixed_dimension " +
                      std::to_string(fixed) + "\n";
  std::string csv = "dimension,fixed_dimension\n" + std::to_string(dim) + "," +
                    std::to_string(fixed) + "\n";
  out.emit("harmonic", params, results, plain, csv);
  return 0;
}

// ---- classify ----

int run_classify(const Output& out, const std::string& group, int n, int max_n) {
  const GroupKind kind = parse_group(group);
  const Int ceiling = mult_ceiling_from_env();
  const auto rep = verify_theorem(kind, n, ceiling, max_n);

  ordered_json params;
  params["group"] = group_name(rep.group, rep.group_n);
  params["max_n"] = max_n == 0 ? (kind == GroupKind::SO ? 12 : 8) : max_n;
  ordered_json rows = ordered_json::array();
  std::string plain = "group " + group_name(rep.group, rep.group_n) + "\n";
  plain += "bound " + rep.bound.str() + "\n";
  std::string csv = "weight,dimension,parity,fixed_dimension\n";
  for (const auto& cw : rep.enumerated) {
    ordered_json row;
    row["weight"] = coords_json(cw.mu);
    row["dimension"] = cw.dim.str();
    row["parity"] = cw.parity_pass;
    row["fixed_dimension"] = cw.fixed_dim ? cw.fixed_dim->str() : "";
    rows.push_back(row);
    const std::string fixed_text = cw.fixed_dim ? cw.fixed_dim->str() : "-";
    plain += "weight " + format_coords(cw.mu) + " dim " + cw.dim.str() +
             " parity " + (cw.parity_pass ? "yes" : "no") + " fixed " +
             fixed_text + "\n";
    csv += csv_weight(cw.mu) + "," + cw.dim.str() + "," +
           (cw.parity_pass ? "1" : "0") + "," + fixed_text + "\n";
  }

  auto coord_list = [](const std::vector<CoordVec>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& mu : v) arr.push_back(coords_json(mu));
    return arr;
  };
  auto plain_list = [](const std::vector<CoordVec>& v) {
    std::string s;
    for (const auto& mu : v) s += " " + format_coords(mu);
    return s.empty() ? std::string(" none") : s;
  };

  ordered_json results;
  results["bound"] = rep.bound.str();
  results["weights"] = rows;
  results["survivors"] = coord_list(rep.survivors);
  results["expected"] = coord_list(rep.expected);
  results["offending"] = coord_list(rep.offending);
  results["verdict"] = rep.verdict == Verdict::Match ? "match" : "mismatch";
  results["note"] = rep.note;

  plain += "survivors" + plain_list(rep.survivors) + "\n";
  plain += "expected" + plain_list(rep.expected) + "\n";
  if (!rep.offending.empty()) plain += "offending" + plain_list(rep.offending) + "\n";
  if (!rep.note.empty()) plain += "note " + rep.note + "\n";
  plain += std::string("verdict ") +
           (rep.verdict == Verdict::Match ? "match" : "mismatch") + "\n";

  out.emit("classify", params, results, plain, csv);
  return rep.verdict == Verdict::Match ? 0 : 1;
}

// ---- embed ----

int run_embed(const Output& out, const std::string& field,
              const std::string& blocks_text, const std::string& eigenvalues_text,
              int samples, std::uint64_t seed) {
  const Field f = parse_field(field);
  const auto blocks = parse_blocks(blocks_text);
  const RatVec eigenvalues =
      eigenvalues_text.empty() ? RatVec{} : parse_rationals(eigenvalues_text);
  const auto model = build_model(f, blocks, eigenvalues);
  const long long stab = stabilizer_dim_exact(model);
  const long long orbit = orbit_dim(model);
  const auto rep = flag_roundtrip(model, samples, seed);

  ordered_json params;
  params["field"] = f == Field::Real ? "real" : "complex";
  ordered_json blocks_arr = ordered_json::array();
  for (int b : model.blocks) blocks_arr.push_back(b);
  params["blocks"] = blocks_arr;
  ordered_json eig_arr = ordered_json::array();
  for (const auto& v : model.eigenvalues) eig_arr.push_back(v.str());
  params["eigenvalues"] = eig_arr;
  params["samples"] = samples;

  ordered_json results;
  results["stabilizer_dimension"] = stab;
  results["orbit_dimension"] = orbit;
  results["max_residual"] = rep.max_residual;
  results["max_gram_residual"] = rep.max_gram_residual;
  results["max_eigenvalue_deviation"] = rep.max_eigenvalue_dev;
  results["worst_sample"] = rep.worst_sample;
  results["tolerance"] = rep.tolerance;
  results["passed"] = rep.passed;

  std::string eig_plain;
  for (const auto& v : model.eigenvalues) {
    if (!eig_plain.empty()) eig_plain += ",";
    eig_plain += v.str();
  }
  std::string plain;
  plain += "field " + std::string(f == Field::Real ? "real" : "complex") + "\n";
  plain += "blocks " + [&] {
    std::string s;
    for (int b : model.blocks) {
      if (!s.empty()) s += ",";
      s += std::to_string(b);
    }
    return s;
  }() + "\n";
  plain += "eigenvalues " + eig_plain + "\n";
  plain += "stabilizer_dimension " + std::to_string(stab) + "\n";
  plain += "orbit_dimension " + std::to_string(orbit) + "\n";
  plain += "samples " + std::to_string(rep.samples) + "\n";
  plain += "seed " + std::to_string(rep.seed) + "\n";
  plain += "max_residual " + format_double(rep.max_residual) + "\n";
  plain += "max_gram_residual " + format_double(rep.max_gram_residual) + "\n";
  plain += "max_eigenvalue_deviation " + format_double(rep.max_eigenvalue_dev) + "\n";
  plain += "tolerance " + format_double(rep.tolerance) + "\n";
  plain += std::string("roundtrip ") + (rep.passed ? "pass" : "fail") + "\n";

  std::string csv =
      "stabilizer_dimension,orbit_dimension,max_residual,passed\n" +
      std::to_string(stab) + "," + std::to_string(orbit) + "," +
      format_double(rep.max_residual) + "," + (rep.passed ? "1" : "0") + "\n";

  out.emit("embed", params, results, plain, csv, seed);
  if (!rep.passed) {
    throw VerificationFailure("roundtrip residual " +
                              format_double(rep.max_residual) +
                              " exceeds tolerance " +
                              format_double(rep.tolerance));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact dimensions, fixed subspaces, and embedding checks for real and "
      "complex flag manifolds"};
  app.require_subcommand(1);

  Output out;
  bool json_flag = false, csv_flag = false;
  app.add_flag("--json", json_flag, "emit a JSON envelope");
  app.add_flag("--csv", csv_flag, "emit CSV rows");
  app.add_option("--out", out.out_path, "write output to a file instead of stdout");

  std::string family, coords, group, field_name, blocks_text, eigenvalues_text;
  int rank = 0, n = 0, degree = 0, max_n = 0, samples = 100;
  long long bound = 0;
  std::uint64_t seed = 42;

  auto* cmd_dim = app.add_subcommand("dim", "dimension of one irreducible module");
  cmd_dim->add_option("family", family, "root system family (A, B, or D)")
      ->required();
  cmd_dim->add_option("rank", rank, "rank")->required();
  cmd_dim->add_option("weight", coords, "comma separated weight, e.g. 2,0,0")
      ->required();

  auto* cmd_enum = app.add_subcommand(
      "enum", "all dominant integral weights with dimension at most a bound");
  cmd_enum->add_option("family", family, "root system family (A, B, or D)")
      ->required();
  cmd_enum->add_option("rank", rank, "rank")->required();
  cmd_enum->add_option("bound", bound, "inclusive dimension bound")->required();

  auto* cmd_fixdim = app.add_subcommand(
      "fixdim", "dimension of the subgroup-fixed subspace of one module");
  cmd_fixdim->add_option("group", group, "SO or SU")->required();
  cmd_fixdim->add_option("n", n, "matrix size")->required();
  cmd_fixdim->add_option("weight", coords, "comma separated weight")->required();

  auto* cmd_harmonic = app.add_subcommand(
      "harmonic", "harmonic polynomial dimensions in three variables");
  cmd_harmonic->add_option("degree", degree, "polynomial degree")->required();

  auto* cmd_classify = app.add_subcommand(
      "classify", "run the minimal-embedding classification for one group");
  cmd_classify->add_option("group", group, "SO or SU")->required();
  cmd_classify->add_option("n", n, "matrix size")->required();
  cmd_classify->add_option("--max-n", max_n,
                           "raise the supported range cap (expert use)");

  auto* cmd_embed = app.add_subcommand(
      "embed", "exact orbit dimensions plus a numerical roundtrip check");
  cmd_embed->add_option("field", field_name, "real or complex")->required();
  cmd_embed->add_option("blocks", blocks_text, "block sizes, e.g. 2,2")
      ->required();
  cmd_embed->add_option("--eigenvalues", eigenvalues_text,
                        "comma separated rational eigenvalues, e.g. 1,-1");
  cmd_embed->add_option("--samples", samples, "number of random samples");
  cmd_embed->add_option("--seed", seed, "random seed");

  // lets the global output flags appear after the subcommand name
  for (auto* sub : {cmd_dim, cmd_enum, cmd_fixdim, cmd_harmonic, cmd_classify,
                    cmd_embed}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (json_flag && csv_flag) {
    std::cerr << "error: --json and --csv are mutually exclusive" << std::endl;
    return 2;
  }
  out.mode = json_flag ? OutputMode::Json
                       : (csv_flag ? OutputMode::Csv : OutputMode::Plain);

  try {
    if (cmd_dim->parsed()) return run_dim(out, family, rank, coords);
    if (cmd_enum->parsed()) return run_enum(out, family, rank, bound);
    if (cmd_fixdim->parsed()) return run_fixdim(out, group, n, coords);
    if (cmd_harmonic->parsed()) return run_harmonic(out, degree);
    if (cmd_classify->parsed()) return run_classify(out, group, n, max_n);
    if (cmd_embed->parsed())
      return run_embed(out, field_name, blocks_text, eigenvalues_text, samples,
                       seed);
    std::cerr << "error: no subcommand" << std::endl;
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const DominanceError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
