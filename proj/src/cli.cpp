#include "presup/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "presup/discourse.hpp"
#include "presup/elaborator.hpp"
#include "presup/lexicon.hpp"
#include "presup/solver.hpp"
#include "presup/syntax.hpp"
#include "presup/typechecker.hpp"

namespace presup::cli {

namespace {

using nlohmann::json;

// Bad flags, unreadable files: anything that is the caller's mistake rather
// than a property of the term.
class UsageError : public Error {
public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// "name : type" with the type parsed against `sig`.
Binding parse_binding(std::string_view line, const Signature& sig) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) throw SyntaxError(0, "'name : type'");
  std::string name = trim(line.substr(0, colon));
  if (name.empty()) throw SyntaxError(0, "a name before ':'");
  return {name, parse_term(line.substr(colon + 1), sig)};
}

std::vector<std::string> entry_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (!t.empty() && t[0] != '#') out.push_back(t);
  }
  return out;
}

json parsed_json(const Derivation& d) { return json::parse(derivation_to_json(d, -1)); }

struct Options {
  std::string signature_file;
  std::string context_file;
  bool json = false;
  std::size_t depth = CheckConfig{}.solver_depth;
  std::size_t max_solutions = CheckConfig{}.max_solutions_per_require;
  std::size_t step_budget = CheckConfig{}.step_budget;
};

class Session {
public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err), sig_(base_signature()) {}

  void configure(const Options& opts) {
    cfg_.solver_depth = opts.depth;
    cfg_.max_solutions_per_require = opts.max_solutions;
    cfg_.step_budget = opts.step_budget;
    try {
      cfg_.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    json_ = opts.json;
    if (!opts.signature_file.empty()) {
      Signature sig = sig_;
      for (const auto& line : entry_lines(read_file(opts.signature_file))) sig.push_back(parse_binding(line, sig));
      check_signature(sig, cfg_);
      sig_ = std::move(sig);
    }
    if (!opts.context_file.empty()) {
      Context ctx;
      for (const auto& line : entry_lines(read_file(opts.context_file))) ctx.push_back(parse_binding(line, sig_));
      check_context(sig_, ctx, cfg_);
      ctx_ = std::move(ctx);
    }
  }

  const Context& context() const { return ctx_; }

  void add_hypothesis(std::string_view line) {
    Binding b = parse_binding(line, sig_);
    Context ctx = ctx_.extended(b.name, b.type);
    check_context(sig_, ctx, cfg_);
    ctx_ = std::move(ctx);
    out_ << b.name << " : " << format_term(b.type) << "\n";
  }

  void clear_context() { ctx_ = {}; }

  void print_context() const {
    for (const auto& b : ctx_.entries()) out_ << b.name << " : " << format_term(b.type) << "\n";
  }

  bool check(std::string_view text) {
    const auto ds = infer_all(sig_, ctx_, parse_term(text, sig_), cfg_);
    if (json_) {
      json arr = json::array();
      for (const auto& d : ds) arr.push_back(parsed_json(*d));
      out_ << arr.dump(2) << "\n";
    } else {
      std::vector<std::pair<Term, std::size_t>> groups;
      for (const auto& d : ds) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return alpha_eq(g.first, d->type()); });
        if (it == groups.end()) {
          groups.emplace_back(d->type(), 1);
        } else {
          ++it->second;
        }
      }
      for (const auto& [type, n] : groups) {
        out_ << format_term(type) << ", " << n << (n == 1 ? " derivation" : " derivations") << "\n";
      }
    }
    return !ds.empty();
  }

  bool elaborate(const Term& t, std::size_t max) {
    auto results = elaborate_all(sig_, ctx_, t, cfg_);
    if (results.size() > max) results.resize(max);
    if (json_) {
      json arr = json::array();
      for (const auto& r : results) {
        json ws = json::array();
        for (const auto& w : witnesses(*r.derivation)) ws.push_back(format_term(w));
        arr.push_back({{"term", format_term(r.term)},
                       {"type", format_term(r.type)},
                       {"witnesses", std::move(ws)},
                       {"derivation", parsed_json(*r.derivation)}});
      }
      out_ << arr.dump(2) << "\n";
    } else {
      for (const auto& r : results) out_ << format_term(r.term) << " : " << format_term(r.type) << "\n";
    }
    return !results.empty();
  }

  bool elaborate_term(std::string_view text, std::size_t max) { return elaborate(parse_term(text, sig_), max); }

  bool elaborate_discourse(std::string_view text, std::size_t max, bool show_meaning) {
    Term meaning = interpret(parse_discourse(text));
    if (show_meaning) out_ << "meaning: " << format_term(meaning) << "\n";
    return elaborate(meaning, max);
  }

  bool solve(std::string_view text) {
    const auto sols = presup::solve(sig_, ctx_, parse_term(text, sig_), cfg_);
    if (json_) {
      json arr = json::array();
      for (const auto& s : sols) {
        arr.push_back({{"witness", format_term(s.witness)},
                       {"type", format_term(s.derivation->type())},
                       {"derivation", parsed_json(*s.derivation)}});
      }
      out_ << arr.dump(2) << "\n";
    } else {
      for (const auto& s : sols) {
        out_ << format_term(s.witness) << " : " << format_term(s.derivation->type()) << "\n";
      }
    }
    if (sols.empty()) err_ << "no solutions for " << trim(text) << "\n";
    return !sols.empty();
  }

private:
  std::ostream& out_;
  std::ostream& err_;
  Signature sig_;
  Context ctx_;
  CheckConfig cfg_;
  bool json_ = false;
};

// Runs `body`, reporting library errors on `err`. Returns the exit status.
template <class F>
int guarded(std::ostream& err, F body) {
  try {
    return body() ? exit_ok : exit_semantic;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return exit_usage;
  } catch (const UnknownWord& e) {
    err << e.what() << "\n";
    return exit_usage;
  } catch (const TypeError& e) {
    if (e.kind() == TypeErrorKind::UnresolvedPresupposition) {
      err << "unresolved presupposition: " << format_term(e.goal()) << "\n";
      for (const auto& b : e.ctx().entries()) err << "  " << b.name << " : " << format_term(b.type) << "\n";
      if (e.ctx().empty()) err << "  in the empty context\n";
    } else {
      err << type_error_name(e.kind()) << ": " << e.what() << "\n";
    }
    return exit_semantic;
  } catch (const EvalError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return exit_semantic;
  }
}

std::string term_argument(const std::string& arg) { return arg.rfind('@', 0) == 0 ? read_file(arg.substr(1)) : arg; }

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--signature", opts.signature_file, "Extra signature entries, one 'name : type' per line");
  cmd->add_option("--context", opts.context_file, "Context entries, one 'name : type' per line");
  cmd->add_flag("--json", opts.json, "Structured output");
  cmd->add_option("--depth", opts.depth, "Longest projection path the solver tries");
  cmd->add_option("--max-solutions", opts.max_solutions, "Witnesses kept per require");
  cmd->add_option("--step-budget", opts.step_budget, "Reduction steps allowed per normalization");
}

const char* repl_help =
    ":check TERM             infer the type(s) of TERM\n"
    ":elab TERM              elaborate TERM\n"
    ":solve TYPE             list witnesses for TYPE\n"
    ":discourse TEXT         interpret and elaborate an English discourse\n"
    ":ctx                    show the context\n"
    ":ctx add NAME : TYPE    add a hypothesis\n"
    ":ctx clear              empty the context\n"
    ":quit                   leave\n";

int repl(Session& session, std::istream& in, std::ostream& out, std::ostream& err) {
  std::string line;
  while (std::getline(in, line)) {
    const std::string input = trim(line);
    if (input.empty()) continue;
    const auto space = input.find(' ');
    const std::string cmd = input.substr(0, space);
    const std::string rest = space == std::string::npos ? "" : trim(std::string_view(input).substr(space));
    if (cmd == ":quit" || cmd == ":q") return exit_ok;
    guarded(err, [&] {
      if (cmd == ":check") return session.check(rest);
      if (cmd == ":elab") return session.elaborate_term(rest, CheckConfig{}.max_total_derivations);
      if (cmd == ":solve") return session.solve(rest);
      if (cmd == ":discourse") return session.elaborate_discourse(rest, CheckConfig{}.max_total_derivations, true);
      if (cmd == ":help") {
        out << repl_help;
        return true;
      }
      if (cmd == ":ctx") {
        if (rest.empty()) {
          session.print_context();
        } else if (rest == "clear") {
          session.clear_context();
        } else if (rest.rfind("add ", 0) == 0) {
          session.add_hypothesis(std::string_view(rest).substr(4));
        } else {
          throw UsageError("usage: :ctx [add NAME : TYPE | clear]");
        }
        return true;
      }
      throw UsageError("unknown command " + cmd + " (try :help)");
    });
  }
  return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dependent type theory with presuppositions", "presup"};
  app.require_subcommand(1);

  Options opts;
  std::string term;
  std::string discourse;
  std::size_t max_results = CheckConfig{}.max_total_derivations;

  auto* check = app.add_subcommand("check", "Infer the types of a term");
  add_common(check, opts);
  check->add_option("term", term, "Term, or @FILE")->required();

  auto* elaborate = app.add_subcommand("elaborate", "Replace every require by a witness");
  add_common(elaborate, opts);
  elaborate->add_option("term", term, "Term, or @FILE");
  elaborate->add_option("--discourse", discourse, "English discourse to interpret first");
  elaborate->add_flag("--all", "List every elaboration (the default)");
  elaborate->add_option("--max", max_results, "Keep at most N elaborations");

  auto* solve = app.add_subcommand("solve", "List witnesses for a type");
  add_common(solve, opts);
  solve->add_option("goal", term, "Goal type, or @FILE")->required();

  auto* repl_cmd = app.add_subcommand("repl", "Interactive session");
  add_common(repl_cmd, opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Session session(out, err);
  const int configured = guarded(err, [&] {
    session.configure(opts);
    return true;
  });
  if (configured != exit_ok) return configured;

  if (*check) return guarded(err, [&] { return session.check(term_argument(term)); });
  if (*solve) return guarded(err, [&] { return session.solve(term_argument(term)); });
  if (*repl_cmd) return repl(session, in, out, err);

  if (term.empty() == discourse.empty()) {
    err << "error: elaborate takes either a term or --discourse\n";
    return exit_usage;
  }
  if (max_results == 0) {
    err << "error: --max must be positive\n";
    return exit_usage;
  }
  return guarded(err, [&] {
    if (!discourse.empty()) return session.elaborate_discourse(discourse, max_results, false);
    return session.elaborate_term(term_argument(term), max_results);
  });
}

} // namespace presup::cli
