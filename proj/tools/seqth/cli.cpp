#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "seqth/axioms.hpp"
#include "seqth/cert.hpp"
#include "seqth/error.hpp"
#include "seqth/hf.hpp"
#include "seqth/sigma.hpp"
#include "seqth/snake.hpp"
#include "seqth/syntax.hpp"

namespace seqth::cli {

namespace {

// A parse error together with the text it points into.
struct InputError {
  std::string what;
  std::string text;
  std::size_t offset;
};

template <class Parse>
auto parse_input(const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError{e.what(), text, e.offset()};
  }
}

Formula read_formula(const std::string& text) {
  return parse_input(text, [](const std::string& s) { return parse_formula(s); });
}

bool looks_polish(const std::string& s) {
  return !s.empty() && s.find_first_not_of("ab") == std::string::npos;
}

struct Options {
  std::string format = "canonical";
  std::string formula;
  std::string klass;
  std::string target;
  std::string input;
  std::string cert_file;
  std::string out_file;
  std::string as = "tree";
  std::string system;
  std::size_t budget = 6;
  std::size_t bound = 4;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const Verdict v = eval_sigma(read_formula(o.formula), o.budget);
  out << to_string(v.truth) << '\n';
  for (const auto& w : v.witnesses) out << w.var << " = " << to_string(w.value) << '\n';
  return v.truth == Truth::yes ? 0 : 1;
}

int cmd_cert(const Options& o, std::ostream& out, std::ostream& err) {
  const ProofResult r = prove_sigma(read_formula(o.formula), o.budget);
  if (!r.certificate) {
    out << to_string(r.status) << '\n';
    return 1;
  }
  const std::string json = to_json(*r.certificate);
  if (o.out_file.empty()) {
    out << json << '\n';
    return 0;
  }
  std::ofstream file(o.out_file);
  file << json << '\n';
  if (!file) {
    err << "error: cannot write " << o.out_file << '\n';
    return 1;
  }
  out << "TRUE\n";
  return 0;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream file(o.cert_file);
  if (!file) {
    err << "error: cannot read " << o.cert_file << '\n';
    return 1;
  }
  std::stringstream buf;
  buf << file.rdbuf();
  const std::string text = buf.str();
  const Certificate cert = parse_input(text, [](const std::string& s) { return certificate_from_json(s); });
  const CheckResult r = check_cert(cert, read_formula(o.formula));
  if (r) {
    out << "ACCEPT\n";
    return 0;
  }
  out << "REJECT " << r.reason << '\n';
  return 1;
}

int cmd_encode(const Options& o, std::ostream& out) {
  if (o.target == "tree") {
    const BinTree t = looks_polish(o.input) ? parse_input(o.input, [](const std::string& s) { return polish_to_tree(s); })
                                            : parse_input(o.input, [](const std::string& s) { return parse_tree(s); });
    out << snake_to_string(tree_to_snake(t)) << '\n';
  } else {
    const HFSet s = parse_input(o.input, [](const std::string& x) { return parse_hf(x); });
    out << snake_to_string(hf_to_snake(s)) << '\n';
  }
  return 0;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const Snake x = parse_input(o.input, [](const std::string& s) { return parse_snake(s); });
  if (o.as == "tree") {
    out << to_string(snake_to_tree(x)) << '\n';
  } else {
    out << to_string(snake_to_hf(x)) << '\n';
  }
  return 0;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  const AxiomReport report = check_axioms(parse_system(o.system), o.bound);
  out << report.to_text();
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sequence theories: evaluation, certificates, interpretations and snake encodings", "seqth"};
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"canonical"}))->capture_default_str();
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Decide a closed Σ-sentence: TRUE with witnesses, or UNKNOWN");
  eval->add_option("formula", o.formula, "Formula text")->required();
  eval->add_option("--budget", o.budget, "Largest witness size searched")->capture_default_str();

  auto* cert = app.add_subcommand("cert", "Produce a proof certificate for a true Σ-sentence");
  cert->add_option("formula", o.formula, "Formula text")->required();
  cert->add_option("--budget", o.budget, "Largest witness size searched")->capture_default_str();
  cert->add_option("--out", o.out_file, "Write the certificate here instead of standard output");

  auto* check = app.add_subcommand("check", "Check a certificate file against a formula");
  check->add_option("cert-file", o.cert_file, "Certificate JSON file")->required();
  check->add_option("formula", o.formula, "Formula text")->required();

  auto* translate = app.add_subcommand("translate", "Translate a set-theoretic formula into the sequence language");
  translate->add_option("target", o.target, "Interpretation")->required()->check(CLI::IsMember({"ast"}));
  translate->add_option("formula", o.formula, "Formula over {in}")->required();

  auto* relativize_cmd = app.add_subcommand("relativize", "Relativize a formula to a class");
  relativize_cmd->add_option("formula", o.formula, "Formula text")->required();
  relativize_cmd->add_option("class", o.klass, "Formula with exactly one free variable")->required();

  auto* encode = app.add_subcommand("encode", "Encode a tree (Polish string or tree text) or HF set as a snake");
  encode->add_option("kind", o.target, "tree or hf")->required()->check(CLI::IsMember({"tree", "hf"}));
  encode->add_option("input", o.input, "Input text")->required();

  auto* decode = app.add_subcommand("decode", "Decode a snake");
  decode->add_option("kind", o.target, "snake")->required()->check(CLI::IsMember({"snake"}));
  decode->add_option("input", o.input, "Snake text, e.g. [2,1,0]")->required();
  decode->add_option("--as", o.as, "tree or hf")->check(CLI::IsMember({"tree", "hf"}))->capture_default_str();

  auto* axioms = app.add_subcommand("axioms", "Check an axiom system exhaustively over a bounded domain");
  axioms->add_option("system", o.system, "seq, seq-star, seq-plus, wseq, t-snakes, ast-tau, ast-ext-snakes")
      ->required();
  axioms->add_option("--bound", o.bound, "Size, leaf or stage bound of the domain")->capture_default_str();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << "run 'seqth --help' for usage\n";
    }
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (cert->parsed()) return cmd_cert(o, out, err);
    if (check->parsed()) return cmd_check(o, out, err);
    if (translate->parsed()) {
      out << to_string(translate_ast(read_formula(o.formula))) << '\n';
      return 0;
    }
    if (relativize_cmd->parsed()) {
      out << to_string(relativize(read_formula(o.formula), read_formula(o.klass))) << '\n';
      return 0;
    }
    if (encode->parsed()) return cmd_encode(o, out);
    if (decode->parsed()) return cmd_decode(o, out);
    if (axioms->parsed()) return cmd_axioms(o, out);
  } catch (const InputError& e) {
    err << "parse error: " << e.what << '\n';
    if (e.text.find('\n') == std::string::npos) {
      err << "  " << e.text << '\n' << "  " << std::string(std::min(e.offset, e.text.size()), ' ') << "^\n";
    }
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace seqth::cli
