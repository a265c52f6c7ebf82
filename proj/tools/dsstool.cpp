// dsstool: construct, verify and simulate difference systems of sets.
//
// Exit status: 0 success, 2 validation or precondition failure, 3
// verification mismatch, 4 budget exceeded, 1 anything else.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dss/dss.h"

namespace {

// Thrown to unwind to main with an exit status and error document.
struct CliFailure {
  int exit_code;
  std::string error;
  std::string message;
};

int exit_code_for(dss_status s) {
  switch (s) {
    case DSS_OK: return 0;
    case DSS_ERR_INDEX_FORMULA_MISMATCH:
    case DSS_ERR_CLAIM_MISMATCH:
    case DSS_ERR_VERIFICATION_FAILED: return 3;
    case DSS_ERR_BUDGET_EXCEEDED: return 4;
    case DSS_ERR_INTERNAL: return 1;
    default: return 2;
  }
}

void check(dss_status s) {
  if (s != DSS_OK) throw CliFailure{exit_code_for(s), dss_status_name(s), dss_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) {
  throw CliFailure{2, "InvalidParameter", message};
}

struct FamilyDeleter {
  void operator()(dss_family* f) const { dss_family_free(f); }
};
struct SequenceDeleter {
  void operator()(dss_sequence* s) const { dss_sequence_free(s); }
};
struct LayoutDeleter {
  void operator()(dss_layout* l) const { dss_layout_free(l); }
};
struct StringDeleter {
  void operator()(char* s) const { dss_string_free(s); }
};

using Family = std::unique_ptr<dss_family, FamilyDeleter>;
using Sequence = std::unique_ptr<dss_sequence, SequenceDeleter>;
using Layout = std::unique_ptr<dss_layout, LayoutDeleter>;

template <class F>
std::string take_string(F&& call) {
  char* raw = nullptr;
  check(call(&raw));
  std::unique_ptr<char, StringDeleter> owned(raw);
  return owned.get();
}

template <class F>
Family take_family(F&& call) {
  dss_family* raw = nullptr;
  check(call(&raw));
  return Family(raw);
}

template <class F>
Sequence take_sequence(F&& call) {
  dss_sequence* raw = nullptr;
  check(call(&raw));
  return Sequence(raw);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{2, "IoError", "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CliFailure{2, "IoError", "cannot write " + path};
}

Family load_family(const std::string& path) {
  const std::string text = read_file(path);
  return take_family([&](dss_family** out) { return dss_family_from_json(text.c_str(), out); });
}

std::vector<std::uint64_t> parse_args(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      usage_error("bad numeric argument '" + item + "'");
    }
  }
  return out;
}

// "method:a,b,..." or a path to a DSS JSON file ("file:" prefix optional).
struct Ingredient {
  std::string method;
  std::vector<std::uint64_t> args;
  std::string path;
};

Ingredient parse_ingredient(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {"file", {}, text};
  Ingredient s{text.substr(0, colon), {}, {}};
  if (s.method == "file") {
    s.path = text.substr(colon + 1);
  } else {
    s.args = parse_args(text.substr(colon + 1));
  }
  return s;
}

void want_args(const Ingredient& s, std::size_t n) {
  if (s.args.size() != n) {
    usage_error(s.method + " takes " + std::to_string(n) + " argument(s), got " + std::to_string(s.args.size()));
  }
}

Sequence build_sequence(const Ingredient& s) {
  if (s.method == "identity-fhs") {
    want_args(s, 1);
    return take_sequence([&](dss_sequence** o) { return dss_identity_fhs(s.args[0], o); });
  }
  if (s.method == "cyclotomic-fhs") {
    want_args(s, 2);
    return take_sequence([&](dss_sequence** o) { return dss_cyclotomic_fhs(s.args[0], s.args[1], o); });
  }
  if (s.method == "file") {
    const auto f = load_family(s.path);
    return take_sequence([&](dss_sequence** o) { return dss_family_to_sequence(f.get(), o); });
  }
  usage_error("'" + s.method + "' does not describe a hopping sequence");
}

Family build_family(const Ingredient& s);

Family family_from_sequence(const Sequence& seq, const std::string& provenance) {
  const auto raw = take_family([&](dss_family** o) { return dss_sequence_to_family(seq.get(), o); });
  return take_family([&](dss_family** o) {
    return dss_family_with_verified_claim(raw.get(), provenance.c_str(), o);
  });
}

std::string describe(const Ingredient& s) {
  std::string out = s.method;
  for (std::size_t i = 0; i < s.args.size(); ++i) out += (i ? "," : " ") + std::to_string(s.args[i]);
  return out;
}

Family build_family(const Ingredient& s) {
  const auto& a = s.args;
  if (s.method == "file") return load_family(s.path);
  if (s.method == "cyclotomic") {
    want_args(s, 3);
    return take_family([&](dss_family** o) { return dss_cyclotomic(a[0], a[1], a[2], o); });
  }
  if (s.method == "quartic-pair") {
    want_args(s, 1);
    return take_family([&](dss_family** o) { return dss_quartic_pair(a[0], o); });
  }
  if (s.method == "sextic-triple") {
    want_args(s, 1);
    return take_family([&](dss_family** o) { return dss_sextic_triple(a[0], o); });
  }
  if (s.method == "sextic-pair") {
    want_args(s, 1);
    return take_family([&](dss_family** o) { return dss_sextic_pair(a[0], o); });
  }
  if (s.method == "paley") {
    want_args(s, 2);
    return take_family([&](dss_family** o) { return dss_paley(a[0], a[1], o); });
  }
  if (s.method == "qr-ds") {
    want_args(s, 1);
    return take_family([&](dss_family** o) { return dss_qr_difference_set(a[0], o); });
  }
  if (s.method == "identity-fhs" || s.method == "cyclotomic-fhs") {
    return family_from_sequence(build_sequence(s), describe(s));
  }
  usage_error("unknown construction '" + s.method + "'");
}

struct ConstructOptions {
  std::string method;
  std::optional<std::uint64_t> n, p, f, q, v;
  std::string a, b, x, d;
  std::string out;
};

std::uint64_t need_opt(const std::optional<std::uint64_t>& value, const char* flag) {
  if (!value) usage_error(std::string("missing ") + flag);
  return *value;
}

void run_construct(const ConstructOptions& o) {
  const std::string& m = o.method;
  Family result;
  auto ingredient_of = [](const std::string& flag, const std::string& value) {
    if (value.empty()) usage_error("missing " + flag);
    return parse_ingredient(value);
  };

  if (m == "cyclotomic") {
    result = build_family({m, {need_opt(o.p, "--p"), need_opt(o.f, "--f"), need_opt(o.q, "--q")}, {}});
  } else if (m == "quartic-pair" || m == "sextic-triple" || m == "sextic-pair") {
    result = build_family({m, {need_opt(o.n, "--n")}, {}});
  } else if (m == "paley" || m == "cyclotomic-fhs") {
    result = build_family({m, {need_opt(o.p, "--p"), need_opt(o.q, "--q")}, {}});
  } else if (m == "qr-ds") {
    result = build_family({m, {need_opt(o.p, "--p")}, {}});
  } else if (m == "identity-fhs") {
    result = build_family({m, {need_opt(o.v, "--v")}, {}});
  } else if (m == "direct-product") {
    const auto a = build_family(ingredient_of("--a", o.a));
    const auto b = build_family(ingredient_of("--b", o.b));
    result = take_family([&](dss_family** out) { return dss_direct_product(a.get(), b.get(), out); });
  } else if (m == "fhs-embed") {
    const auto x = build_sequence(ingredient_of("--x", o.x));
    const auto b = build_family(ingredient_of("--b", o.b));
    result = take_family([&](dss_family** out) { return dss_fhs_embedding_product(x.get(), b.get(), out); });
  } else if (m == "fhs-ds") {
    const auto x = build_sequence(ingredient_of("--x", o.x));
    const auto d = build_family(ingredient_of("--d", o.d.empty() ? o.b : o.d));
    result = take_family([&](dss_family** out) { return dss_fhs_ds_product(x.get(), d.get(), out); });
  } else {
    usage_error("unknown method '" + m + "'");
  }
  write_output(o.out, take_string([&](char** s) { return dss_family_to_json(result.get(), s); }) + "\n");
}

void run_verify(const std::string& path) {
  const auto f = load_family(path);
  std::cout << take_string([&](char** s) { return dss_verify_json(f.get(), s); }) << "\n";
  int matches = 0;
  const dss_status st = dss_check_claim(f.get(), &matches);
  if (st == DSS_ERR_NO_CLAIM) return;
  check(st);
  if (!matches) throw CliFailure{3, "ClaimMismatch", "claimed index does not match the verified index"};
}

void run_table(const std::string& which, std::optional<std::uint64_t> p, std::optional<std::uint64_t> q,
               const std::string& out) {
  std::string csv;
  if (which == "paley-row" && (p || q)) {
    csv = take_string([&](char** s) { return dss_paley_row_csv(need_opt(p, "--p"), need_opt(q, "--q"), s); });
  } else {
    csv = take_string([&](char** s) { return dss_table_csv(which.c_str(), s); });
  }
  write_output(out, csv);
}

void run_scan(const std::string& form, std::uint64_t n_max) {
  std::size_t count = 0;
  check(dss_scan_prime_forms(form.c_str(), n_max, nullptr, 0, &count));
  std::vector<std::uint64_t> values(count);
  check(dss_scan_prime_forms(form.c_str(), n_max, values.data(), values.size(), &count));
  std::cout << nlohmann::json(values).dump() << "\n";
}

void run_bounds(std::int64_t v, std::uint64_t q, std::uint64_t rho) {
  dss_bounds b{};
  check(dss_compute_bounds(v, q, rho, &b));
  nlohmann::ordered_json j;
  j["v"] = v;
  j["q"] = q;
  j["rho"] = rho;
  if (b.defined) {
    j["levenshtein_bound"] = b.levenshtein_bound;
    j["levenshtein_ceiling"] = b.levenshtein_ceiling;
    j["wang_bound"] = b.wang_bound;
  } else {
    j["levenshtein_bound"] = nullptr;
    j["levenshtein_ceiling"] = nullptr;
    j["wang_bound"] = nullptr;
  }
  std::cout << j.dump(2) << "\n";
}

Layout make_layout(const std::string& path, std::optional<std::uint64_t> alphabet) {
  const auto f = load_family(path);
  const std::size_t q = dss_family_set_count(f.get());
  dss_layout* raw = nullptr;
  check(dss_layout_create(f.get(), alphabet.value_or(std::max<std::size_t>(q, 2)), &raw));
  return Layout(raw);
}

void run_layout(const std::string& path, std::optional<std::uint64_t> alphabet) {
  const auto l = make_layout(path, alphabet);
  nlohmann::ordered_json j;
  j["length"] = dss_layout_length(l.get());
  j["free_positions"] = dss_layout_free_count(l.get());
  j["tolerance"] = dss_layout_tolerance(l.get());
  j["pattern"] = take_string([&](char** s) { return dss_layout_pattern(l.get(), s); });
  std::cout << j.dump(2) << "\n";
}

void run_simulate(const std::string& path, std::optional<std::uint64_t> alphabet, std::uint64_t blocks,
                  const std::string& noise, std::uint64_t seed) {
  const auto l = make_layout(path, alphabet);
  std::cout << take_string([&](char** s) { return dss_simulate_json(l.get(), blocks, noise.c_str(), seed, s); })
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Difference systems of sets: construction, verification and sync simulation"};
  app.require_subcommand(1);

  ConstructOptions construct;
  auto* c = app.add_subcommand("construct", "Build a family and write it as DSS JSON");
  c->add_option("method", construct.method,
                "cyclotomic | quartic-pair | sextic-triple | sextic-pair | paley | qr-ds | identity-fhs | "
                "cyclotomic-fhs | direct-product | fhs-embed | fhs-ds")
      ->required();
  c->add_option("--n", construct.n, "Series parameter n");
  c->add_option("--p", construct.p, "Prime modulus");
  c->add_option("--f", construct.f, "Cyclotomic f");
  c->add_option("--q", construct.q, "Number of sets (or classes)");
  c->add_option("--v", construct.v, "Period of the identity sequence");
  c->add_option("--a", construct.a, "First product ingredient, e.g. paley:7,3 or file.json");
  c->add_option("--b", construct.b, "Second product ingredient");
  c->add_option("--x", construct.x, "Hopping sequence ingredient, e.g. identity-fhs:7");
  c->add_option("--d", construct.d, "Difference set ingredient, e.g. qr-ds:7");
  c->add_option("-o,--out", construct.out, "Output path (stdout if omitted)");

  std::string verify_path;
  auto* v = app.add_subcommand("verify", "Print the verification report of a DSS JSON file");
  v->add_option("path", verify_path)->required();

  std::string table_which, table_out;
  std::optional<std::uint64_t> table_p, table_q;
  auto* t = app.add_subcommand("table", "Emit a verified parameter table as CSV");
  t->add_option("which", table_which, "table1 | paley-row")->required();
  t->add_option("--p", table_p, "Prime for a single paley-row");
  t->add_option("--q", table_q, "Set count for a single paley-row");
  t->add_option("-o,--out", table_out, "Output path (stdout if omitted)");

  std::string scan_form;
  std::uint64_t scan_n_max = 0;
  auto* s = app.add_subcommand("scan", "List n <= n_max for which a n^2 + 1 is prime");
  s->add_option("form", scan_form, "16n2+1 | 12n2+1 | 108n2+1")->required();
  s->add_option("n_max", scan_n_max)->required();

  std::int64_t bounds_v = 0;
  std::uint64_t bounds_q = 0, bounds_rho = 0;
  auto* b = app.add_subcommand("bounds", "Levenshtein and Wang lower bounds on redundancy");
  b->add_option("v", bounds_v)->required();
  b->add_option("q", bounds_q)->required();
  b->add_option("rho", bounds_rho)->required();

  std::string layout_path;
  std::optional<std::uint64_t> layout_alphabet;
  auto* l = app.add_subcommand("layout", "Show the marker pattern of a DSS JSON file");
  l->add_option("path", layout_path)->required();
  l->add_option("--alphabet", layout_alphabet, "Code alphabet size (default max(q, 2))");

  std::string sim_path, sim_noise = "exact-0";
  std::optional<std::uint64_t> sim_alphabet;
  std::uint64_t sim_blocks = 200, sim_seed = 0;
  auto* m = app.add_subcommand("simulate", "Slide a sync detector over a noisy encoded stream");
  m->add_option("path", sim_path)->required();
  m->add_option("--alphabet", sim_alphabet, "Code alphabet size (default max(q, 2))");
  m->add_option("--blocks", sim_blocks, "Number of codewords in the stream");
  m->add_option("--noise", sim_noise, "exact-<t> or iid-<p>");
  m->add_option("--seed", sim_seed, "Generator seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c) run_construct(construct);
    if (*v) run_verify(verify_path);
    if (*t) run_table(table_which, table_p, table_q, table_out);
    if (*s) run_scan(scan_form, scan_n_max);
    if (*b) run_bounds(bounds_v, bounds_q, bounds_rho);
    if (*l) run_layout(layout_path, layout_alphabet);
    if (*m) run_simulate(sim_path, sim_alphabet, sim_blocks, sim_noise, sim_seed);
  } catch (const CliFailure& f) {
    nlohmann::ordered_json err;
    err["error"] = f.error;
    err["message"] = f.message;
    std::cerr << err.dump() << "\n";
    return f.exit_code;
  }
  return 0;
}
