// arterm: synthesize and check arithmetic-term closed forms for C-recursive
// sequences.

#include "arterm/catalog.hpp"
#include "arterm/errors.hpp"
#include "arterm/spec_io.hpp"
#include "arterm/synthesis.hpp"
#include "arterm/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace arterm;

enum Exit { kOk = 0, kUsage = 1, kAllZero = 2, kMismatch = 3 };

std::string slurp(const std::string& source) {
  if (source == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(source);
  if (!in) throw DomainError("cannot open '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A spec argument is inline JSON, a file path, or "-" for stdin.
std::string json_source(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  return slurp(arg);
}

Recurrence load_spec(const std::string& arg) { return recurrence_from_json_text(json_source(arg)); }

TermFormat term_format(const std::string& name) {
  if (name == "latex") return TermFormat::latex;
  if (name == "json") return TermFormat::json;
  return TermFormat::text;
}

struct SynthArgs {
  std::string spec;
  std::size_t horizon = 40;
  std::string force_b;
  std::string force_c;
  std::string format = "text";
  bool assume_nonnegative = false;
};

int run_synth(const SynthArgs& a) {
  SynthesisOptions opts;
  opts.horizon = a.horizon;
  opts.assume_nonnegative = a.assume_nonnegative;
  if (!a.force_b.empty()) opts.force_b = parse_bigint(a.force_b);
  if (!a.force_c.empty()) opts.force_c = parse_bigint(a.force_c);
  const SynthesisResult r = synthesize(load_spec(a.spec), opts);
  if (a.format == "json") {
    std::cout << to_json(r).dump(2) << "\n";
    return kOk;
  }
  const auto& cert = r.certificate;
  std::cout << render(r.term, term_format(a.format)) << "\n";
  std::cout << "b=" << to_string(r.b) << " c=" << to_string(r.c) << " valid_from=" << r.valid_from
            << (r.valid_at_zero ? " (also valid at n=0)" : "") << "\n";
  std::cout << "certificate: c_t=" << to_string(cert.c_t) << " rho=" << to_string(cert.rho)
            << " b1=" << to_string(cert.b1) << " m=" << cert.m << " b2=" << to_string(cert.b2)
            << " lambda<=" << to_string(cert.lambda) << " m_b="
            << (cert.m_chosen ? std::to_string(*cert.m_chosen) : std::string("none"))
            << (cert.holds() ? "" : " (inequalities do not hold)") << "\n";
  return kOk;
}

struct EvalArgs {
  std::string term;
  std::string n;
  std::vector<std::string> env;
};

int run_eval(const EvalArgs& a) {
  const Term t = parse(a.term);
  Assignment env;
  if (!a.n.empty()) env["n"] = parse_bigint(a.n);
  for (const auto& binding : a.env) {
    const auto eq = binding.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("--env expects name=value, got '" + binding + "'");
    env[binding.substr(0, eq)] = parse_bigint(binding.substr(eq + 1));
  }
  std::cout << to_string(evaluate(t, env)) << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string spec;
  std::string fixture;
  std::string result;
  std::string term;
  bool synth = false;
  std::string c;
  std::optional<std::size_t> from;
  std::size_t to = 40;
  std::string format = "text";
  unsigned threads = 1;
};

int run_verify(const VerifyArgs& a) {
  std::optional<Recurrence> rec;
  std::optional<Term> term;
  BigInt c = 0;
  std::size_t from = 1;

  if (!a.fixture.empty()) {
    const Fixture& f = fixture(a.fixture);
    rec = f.recurrence;
    term = f.reference_term;
    c = f.reference_c;
    from = f.valid_from;
  }
  if (!a.result.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json_source(a.result));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.contains("recurrence") || !j.contains("c")) throw ParseError("synthesis result needs recurrence and c", 0);
    rec = recurrence_from_json(j.at("recurrence"));
    term = j.contains("term_ast") ? term_from_json(j.at("term_ast")) : parse(j.at("term").get<std::string>());
    c = parse_bigint(j.at("c").get<std::string>());
    from = j.value("valid_from", std::size_t{1});
  }
  if (!a.spec.empty()) rec = load_spec(a.spec);
  if (!rec) throw DomainError("verify needs --spec, --fixture or --result");
  if (a.synth) {
    const SynthesisResult r = synthesize(*rec);
    term = r.term;
    c = r.c;
  }
  if (!a.term.empty()) term = parse(a.term);
  if (!term) throw DomainError("verify needs a term: --term, --synth, --fixture or --result");
  if (!a.c.empty()) c = parse_bigint(a.c);
  if (a.from) from = *a.from;

  const VerificationReport report = verify_term(eval_oracle(*rec, a.to), *term, c, from, a.to, a.threads);
  if (a.format == "json")
    std::cout << to_json(report).dump() << "\n";
  else
    std::cout << describe(report) << "\n";
  return report.ok() ? kOk : kMismatch;
}

int run_gf(const std::string& spec, const std::string& shift) {
  const BigInt c = shift.empty() ? BigInt(0) : parse_bigint(shift);
  std::cout << gf_shift(generating_function(load_spec(spec)), c).to_string() << "\n";
  return kOk;
}

int run_expand(const std::string& spec, std::size_t n) {
  const SequenceWindow w = eval_oracle(load_spec(spec), n);
  for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << to_string(w[i]);
  std::cout << "\n";
  return kOk;
}

int run_catalog_list() {
  for (const auto& f : fixtures())
    std::cout << f.id << "\tb=" << to_string(f.reference_b) << "\tc=" << to_string(f.reference_c) << "\tn>=" << f.valid_from
              << "\t" << f.name << "\n";
  return kOk;
}

int run_catalog_show(const std::string& id, const std::string& format) {
  const Fixture& f = fixture(id);
  if (format == "json") {
    std::cout << to_json(f).dump(2) << "\n";
    return kOk;
  }
  std::cout << f.id << ": " << f.name << "\n";
  std::cout << "recurrence: " << to_json(f.recurrence).dump() << "\n";
  std::cout << "term: " << render(f.reference_term, term_format(format)) << "\n";
  std::cout << "b=" << to_string(f.reference_b) << " c=" << to_string(f.reference_c) << " valid_from=" << f.valid_from << "\n";
  if (f.alternate_term) std::cout << "alternate: " << render(*f.alternate_term, term_format(format)) << "\n";
  if (!f.notes.empty()) std::cout << "notes: " << f.notes << "\n";
  return kOk;
}

int run_catalog_export() {
  nlohmann::json all = nlohmann::json::array();
  for (const auto& f : fixtures()) all.push_back(to_json(f));
  std::cout << all.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic-term closed forms for C-recursive integer sequences"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "latex", "json"};

  SynthArgs synth;
  auto* cmd_synth = app.add_subcommand("synth", "Synthesize s(n) = E(n, b) - c^(n+1)");
  cmd_synth->add_option("spec", synth.spec, "Recurrence JSON (file, inline, or - for stdin)")->required();
  cmd_synth->add_option("--horizon", synth.horizon, "Verify on [1, N]")->capture_default_str();
  cmd_synth->add_option("--force-b", synth.force_b, "Use this base instead of searching");
  cmd_synth->add_option("--force-c", synth.force_c, "Use this shift constant");
  cmd_synth->add_flag("--assume-nonnegative", synth.assume_nonnegative, "Take c = 0 without a proof");
  cmd_synth->add_option("--format", synth.format)->check(CLI::IsMember(formats))->capture_default_str();

  EvalArgs eval;
  auto* cmd_eval = app.add_subcommand("eval", "Evaluate a term");
  cmd_eval->add_option("term", eval.term, "Term text, e.g. 'fl(3^(n^2+n) / (3^(2*n) -. (3^n + 1))) % 3^n'")
      ->required();
  cmd_eval->add_option("--n,-n", eval.n, "Value of n");
  cmd_eval->add_option("--env", eval.env, "Extra bindings name=value");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Check a term against a recurrence");
  cmd_verify->add_option("--spec", verify.spec, "Recurrence JSON (file, inline, or -)");
  cmd_verify->add_option("--fixture", verify.fixture, "Catalog fixture id");
  cmd_verify->add_option("--result", verify.result, "Output of `synth --format json`");
  cmd_verify->add_option("--term", verify.term, "Term text");
  cmd_verify->add_flag("--synth", verify.synth, "Synthesize the term first");
  cmd_verify->add_option("--c", verify.c, "Shift constant");
  cmd_verify->add_option("--from", verify.from, "First index");
  cmd_verify->add_option("--to", verify.to, "Last index")->capture_default_str();
  cmd_verify->add_option("--threads", verify.threads, "Worker threads")->capture_default_str();
  cmd_verify->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string gf_spec, gf_shift_arg;
  auto* cmd_gf = app.add_subcommand("gf", "Print the generating function");
  cmd_gf->add_option("spec", gf_spec)->required();
  cmd_gf->add_option("--shift", gf_shift_arg, "Add c / (1 - c z)");

  std::string expand_spec;
  std::size_t expand_n = 10;
  auto* cmd_expand = app.add_subcommand("expand", "Print s(0..N)");
  cmd_expand->add_option("spec", expand_spec)->required();
  cmd_expand->add_option("--n,-n", expand_n)->capture_default_str();

  auto* cmd_catalog = app.add_subcommand("catalog", "Pinned examples");
  cmd_catalog->require_subcommand(1);
  auto* cmd_list = cmd_catalog->add_subcommand("list", "List fixtures");
  std::string show_id, show_format = "text";
  auto* cmd_show = cmd_catalog->add_subcommand("show", "Show one fixture");
  cmd_show->add_option("id", show_id)->required();
  cmd_show->add_option("--format", show_format)->check(CLI::IsMember(formats))->capture_default_str();
  auto* cmd_export = cmd_catalog->add_subcommand("export", "All fixtures as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cmd_synth) return run_synth(synth);
    if (*cmd_eval) return run_eval(eval);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_gf) return run_gf(gf_spec, gf_shift_arg);
    if (*cmd_expand) return run_expand(expand_spec, expand_n);
    if (*cmd_list) return run_catalog_list();
    if (*cmd_show) return run_catalog_show(show_id, show_format);
    if (*cmd_export) return run_catalog_export();
  } catch (const AllZeroSequenceError& e) {
    std::cerr << "arterm: unsupported input: " << e.what() << "\n";
    return kAllZero;
  } catch (const VerificationError& e) {
    std::cerr << "arterm: internal error: " << e.what() << "\n";
    return kMismatch;
  } catch (const arterm::Error& e) {
    std::cerr << "arterm: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
