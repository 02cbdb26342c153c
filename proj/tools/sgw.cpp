// sgw: command-line front end for the signed-graph workbench.
//
// Exit codes: 0 ok / true, 1 false / non-member / counterexample, 2 usage or
// input error.

#include "sgw/canon.hpp"
#include "sgw/enumerate.hpp"
#include "sgw/exact.hpp"
#include "sgw/families.hpp"
#include "sgw/numeric.hpp"
#include "sgw/sg_format.hpp"
#include "sgw/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

sgw::SignedGraph load(const std::string& path) {
  try {
    if (path == "-") return sgw::read_sg(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return sgw::read_sg(in);
  } catch (const sgw::ParseError& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

json coeffs_json(const sgw::IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

int cmd_spectrum(const std::string& file, bool exact, bool as_json) {
  const auto g = load(file);
  const auto spec = sgw::eigenvalues(g);
  const std::string pretty = sgw::pretty_spectrum(spec);
  std::optional<sgw::MembershipReport> m;
  if (exact) m = sgw::membership(g);
  if (as_json) {
    json j{{"schema", 1}, {"n", g.order()}, {"eigenvalues", spec.values}, {"pretty", pretty}};
    if (m) {
      j["mult_plus"] = m->mult_plus;
      j["mult_minus"] = m->mult_minus;
      j["residual_coeffs"] = coeffs_json(m->residual);
    }
    print_json(j);
  } else {
    std::cout << pretty << '\n';
    if (m) {
      std::cout << "mult(+1): " << m->mult_plus << '\n'
                << "mult(-1): " << m->mult_minus << '\n'
                << "residual: " << sgw::to_string(m->residual) << '\n';
    }
  }
  return kOk;
}

int cmd_member(const std::string& file, bool as_json) {
  const auto m = sgw::membership(load(file));
  if (as_json) {
    print_json(sgw::to_json(m));
  } else {
    std::cout << (m.member ? "member" : "non-member") << '\n'
              << "n: " << m.n << '\n'
              << "mult(+1): " << m.mult_plus << '\n'
              << "mult(-1): " << m.mult_minus << '\n'
              << "residual: " << sgw::to_string(m.residual) << '\n';
  }
  return m.member ? kOk : kFalse;
}

int cmd_canon(const std::string& file, bool as_json) {
  const auto code = sgw::canonical_code(load(file));
  if (as_json) {
    print_json({{"schema", 1}, {"code", code.hex()}});
  } else {
    std::cout << code.hex() << '\n';
  }
  return kOk;
}

int report_bool(const char* key, bool value, bool as_json) {
  if (as_json) {
    print_json({{"schema", 1}, {key, value}});
  } else {
    std::cout << (value ? "true" : "false") << '\n';
  }
  return value ? kOk : kFalse;
}

int cmd_family(const std::string& tag_text, int m, int l, const std::string& out) {
  const auto tag = sgw::parse_tag(tag_text);
  if (!tag) throw UsageError("unknown family tag: " + tag_text);
  const sgw::FamilySpec spec{*tag, m, l};
  sgw::SignedGraph g;
  try {
    g = sgw::build(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = "# " + spec.name() + "\n" + sgw::serialize_sg(g);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
  }
  return kOk;
}

int cmd_enumerate(int max_order, int workers, const std::string& dump, bool classify,
                  bool as_json) {
  const auto report = sgw::enumerate_members(max_order, workers);
  for (const auto& s : report.stats) {
    std::cerr << "order " << s.order << ": parents " << s.parents << ", children " << s.children
              << ", pruned " << s.pruned << ", exact prune checks " << s.exact_prune_checks
              << ", frontier " << s.frontier << ", " << s.seconds << " s\n";
  }
  if (!dump.empty()) {
    std::filesystem::create_directories(dump);
    for (const auto& level : report.members) {
      for (const auto& c : level) {
        std::ofstream f(std::filesystem::path(dump) / (c.hex() + ".sg"));
        f << sgw::serialize_sg(sgw::decode(c));
      }
    }
  }
  const auto counts = report.counts();
  if (as_json) {
    json members = json::array();
    for (std::size_t k = 0; k < report.members.size(); ++k) {
      for (const auto& c : report.members[k]) {
        json item{{"order", k + 1}, {"code", c.hex()}};
        if (classify) item["class"] = sgw::classify_member(sgw::decode(c)).label();
        members.push_back(item);
      }
    }
    print_json({{"schema", 1}, {"max_order", max_order}, {"counts", counts}, {"members", members}});
    return kOk;
  }
  for (std::size_t k = 0; k < counts.size(); ++k) std::cout << k + 1 << ": " << counts[k] << '\n';
  if (classify) {
    for (std::size_t k = 0; k < report.members.size(); ++k) {
      for (const auto& c : report.members[k]) {
        std::cout << k + 1 << ' ' << c.hex() << ' '
                  << sgw::classify_member(sgw::decode(c)).label() << '\n';
      }
    }
  }
  return kOk;
}

int cmd_verify(bool all, const std::string& claim, int max_order, int workers, bool as_json) {
  std::vector<std::string> names;
  if (all) {
    names = sgw::claim_names();
  } else {
    const auto& known = sgw::claim_names();
    if (std::find(known.begin(), known.end(), claim) == known.end())
      throw UsageError("unknown claim: " + claim);
    names = {claim};
  }
  sgw::EnumerationReport report;
  if (std::any_of(names.begin(), names.end(), sgw::claim_needs_enumeration)) {
    std::cerr << "enumerating members up to order " << max_order << "\n";
    report = sgw::enumerate_members(max_order, workers);
  }
  bool ok = true;
  json out = json::array();
  for (const auto& name : names) {
    const auto r = sgw::run_claim(name, report);
    ok = ok && r.passed();
    if (as_json) {
      out.push_back(sgw::to_json(r));
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.instances
              << " instances, " << r.failures << " counterexamples, " << r.seconds << " s\n"
              << "  scope: " << r.scope << '\n';
    for (const auto& c : r.counterexamples) std::cout << "  counterexample: " << c << '\n';
  }
  if (as_json) print_json({{"schema", 1}, {"claims", out}});
  return ok ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed graphs with at most two eigenvalues other than +-1"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string file, file2;
  bool exact = false;

  auto* spectrum = app.add_subcommand("spectrum", "Numeric spectrum of a .sg file");
  spectrum->add_option("file", file, ".sg file, - for stdin")->required();
  spectrum->add_flag("--exact", exact, "Also print exact +-1 multiplicities and residual");

  auto* member = app.add_subcommand("member", "Exact membership report; exit 0 iff member");
  member->add_option("file", file, ".sg file, - for stdin")->required();

  auto* canon = app.add_subcommand("canon", "Hex canonical code");
  canon->add_option("file", file, ".sg file, - for stdin")->required();

  auto* equivalent = app.add_subcommand("equivalent", "Exit 0 iff switching isomorphic");
  equivalent->add_option("file1", file, ".sg file, - for stdin")->required();
  equivalent->add_option("file2", file2, ".sg file, - for stdin")->required();

  auto* sign_symmetric =
      app.add_subcommand("sign-symmetric", "Exit 0 iff switching isomorphic with its negative");
  sign_symmetric->add_option("file", file, ".sg file, - for stdin")->required();

  std::string tag, out;
  int m = 0, l = 0;
  auto* family = app.add_subcommand("family", "Write a family member as .sg");
  family->add_option("tag", tag, "s-ml, bip-a, bip-b, bip-c, a1..a4, sporadic-1, sporadic-2")
      ->required();
  family->add_option("-m", m, "First parameter");
  family->add_option("-l", l, "Second parameter");
  family->add_option("-o", out, "Output file (default stdout)");

  int max_order = 8;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string dump;
  bool classify = false;
  auto* enumerate = app.add_subcommand("enumerate", "Connected members up to switching");
  enumerate->add_option("--max-order", max_order, "Largest order")
      ->required()
      ->check(CLI::Range(1, 12));
  enumerate->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--dump", dump, "Write one .sg file per member into this directory");
  enumerate->add_flag("--classify", classify, "Label each member with its family");

  bool all = false;
  std::string claim;
  auto* verify = app.add_subcommand("verify", "Run the claim checks at desk scale");
  auto* all_opt = verify->add_flag("--all", all, "Every claim");
  auto* claim_opt = verify->add_option("--claim", claim, "One claim by name");
  all_opt->excludes(claim_opt);
  verify->add_option("--max-order", max_order, "Enumeration order for claims that need it")
      ->check(CLI::Range(1, 10))
      ->capture_default_str();
  verify->add_option("--workers", workers, "Worker threads for enumeration")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const bool as_json = format == "json";
  try {
    if (*spectrum) return cmd_spectrum(file, exact, as_json);
    if (*member) return cmd_member(file, as_json);
    if (*canon) return cmd_canon(file, as_json);
    if (*equivalent) {
      if (file == "-" && file2 == "-") throw UsageError("only one argument may be stdin");
      return report_bool("equivalent", sgw::switching_isomorphic(load(file), load(file2)),
                         as_json);
    }
    if (*sign_symmetric) return report_bool("sign_symmetric", sgw::is_sign_symmetric(load(file)), as_json);
    if (*family) return cmd_family(tag, m, l, out);
    if (*enumerate) return cmd_enumerate(max_order, workers, dump, classify, as_json);
    if (*verify) {
      if (!all && claim.empty()) throw UsageError("verify needs --all or --claim NAME");
      return cmd_verify(all, claim, max_order, workers, as_json);
    }
  } catch (const UsageError& e) {
    std::cerr << "sgw: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
