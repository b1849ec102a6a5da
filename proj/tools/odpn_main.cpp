// odpn: command-line front end for the ordinal diagram library.
//
// Verbs: parse, print, cmp, validate, decompose, seq, iterate, enumerate,
// check. Exit codes: 0 success (and, for check, no failing check), 1 usage or
// runtime error, 2 validity rejection.

#include <odpn/odpn.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace odpn;

int const kExitError = 1;
int const kExitInvalid = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cli {
  std::string verb;
  std::vector<std::string> pos;
  std::map<std::string, std::string> flags;

  bool has(std::string const& f) const { return flags.count(f) != 0; }
  std::string get(std::string const& f, std::string const& dflt) const {
    auto it = flags.find(f);
    return it == flags.end() ? dflt : it->second;
  }
};

std::string const kUsage =
    "usage: odpn <verb> [args] [--system od|m32|piN] [--N k]\n"
    "  parse <term>                parse, validate, print canonical form\n"
    "  print <term>                parse and print canonical form\n"
    "  cmp <a> <b>                 print LT, EQ, or GT\n"
    "  validate <term>             print the validity report\n"
    "  decompose <a> <s>           print the decomposition point a(s)\n"
    "  seq <k> <a> <b>             print the induced sequence s[k;a,b]\n"
    "  iterate [--op name] (--carrier file | --max-symbols B)\n"
    "                              print the stage map of an operator run\n"
    "  enumerate --max-symbols B   print the valid carrier, one per line\n"
    "  check --suite all|order|id[,id...] (--carrier file | --max-symbols B)\n"
    "                              run verification checks\n"
    "flags: --system od|m32|piN (default piN), --N k (default 4),\n"
    "       --op gamma2|gamma32|gammaN; env ODPN_SEED seeds sampled checks\n";

Cli parseArgv(int argc, char** argv) {
  Cli c;
  if (argc < 2) throw UsageError("missing verb");
  c.verb = argv[1];
  for (int i = 2; i < argc; ++i) {
    std::string a = argv[i];
    if (a.rfind("--", 0) == 0) {
      std::string name = a.substr(2);
      if (i + 1 >= argc) throw UsageError("flag --" + name + " needs a value");
      c.flags[name] = argv[++i];
    } else {
      c.pos.push_back(a);
    }
  }
  return c;
}

Params paramsOf(Cli const& c) {
  Params p;
  std::string sys = c.get("system", "piN");
  if (sys == "od")
    p.sys = System::OdSuper;
  else if (sys == "m32")
    p.sys = System::OdM32;
  else if (sys == "piN")
    p.sys = System::OdPiN;
  else
    throw UsageError("unknown system: " + sys);
  std::string n = c.get("N", "4");
  p.N = std::stoi(n);
  if (p.N < 4) throw UsageError("--N must be at least 4");
  return p;
}

std::string need(Cli const& c, size_t i, std::string const& what) {
  if (i >= c.pos.size()) throw UsageError("missing argument: " + what);
  return c.pos[i];
}

// Parse, then gate on validity. Invalid input prints the report to stderr
// and exits with the validity code.
Ref parseChecked(Params const& p, std::string const& text) {
  Ref t = parse(text);
  ValidityReport r = validate(p, t);
  if (!r.valid) {
    std::cerr << "invalid: " << print(t) << "\n";
    for (auto const& v : r.violations)
      std::cerr << "  " << v.clause << ": " << v.detail << "\n";
    std::exit(kExitInvalid);
  }
  return t;
}

Carrier loadCarrier(Params const& p, std::string const& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open carrier file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Carrier u;
  for (std::string const& line : splitLines(ss.str())) {
    if (line.empty()) continue;
    u.push_back(parseChecked(p, line));
  }
  for (size_t i = 1; i < u.size(); ++i) {
    if (!lt(u[i - 1], u[i]))
      throw std::runtime_error("carrier file not sorted ascending at line " +
                               std::to_string(i + 1));
  }
  return u;
}

// A carrier from either --carrier or --max-symbols, in ascending order.
Carrier carrierOf(Cli const& c, Params const& p) {
  if (c.has("carrier")) return loadCarrier(p, c.get("carrier", ""));
  if (c.has("max-symbols")) {
    int b = std::stoi(c.get("max-symbols", ""));
    if (b < 1) throw UsageError("--max-symbols must be positive");
    Carrier u = enumerateValid(p, b);
    std::sort(u.begin(), u.end(), [](Ref a, Ref b2) { return lt(a, b2); });
    return u;
  }
  throw UsageError("need --carrier <file> or --max-symbols <B>");
}

int cmdParse(Cli const& c, Params const& p) {
  std::cout << print(parseChecked(p, need(c, 0, "term"))) << "\n";
  return 0;
}

int cmdPrint(Cli const& c, Params const&) {
  std::cout << print(parse(need(c, 0, "term"))) << "\n";
  return 0;
}

int cmdCmp(Cli const& c, Params const&) {
  Ref a = parse(need(c, 0, "first term"));
  Ref b = parse(need(c, 1, "second term"));
  std::cout << (lt(a, b) ? "LT" : (a == b ? "EQ" : "GT")) << "\n";
  return 0;
}

int cmdValidate(Cli const& c, Params const& p) {
  Ref t = parse(need(c, 0, "term"));
  ValidityReport r = validate(p, t);
  if (r.valid) {
    std::cout << "valid: " << print(t) << "\n";
    return 0;
  }
  std::cout << "invalid: " << print(t) << "\n";
  for (auto const& v : r.violations)
    std::cout << "  " << v.clause << ": " << v.detail << "\n";
  return kExitInvalid;
}

int cmdDecompose(Cli const& c, Params const& p) {
  Ref a = parseChecked(p, need(c, 0, "term"));
  IndexSeq s = parseSeq(need(c, 1, "index sequence"));
  std::cout << print(astSeq(a, s)) << "\n";
  return 0;
}

int cmdSeq(Cli const& c, Params const& p) {
  int k = std::stoi(need(c, 0, "index k"));
  Ref a = parseChecked(p, need(c, 1, "first term"));
  Ref b = parseChecked(p, need(c, 2, "second term"));
  std::cout << astBracket(k, p.N, a, b).str() << "\n";
  return 0;
}

int cmdIterate(Cli const& c, Params const& p) {
  Carrier u = carrierOf(c, p);
  std::string dflt = p.sys == System::OdM32
                         ? "gamma32"
                         : (p.sys == System::OdPiN ? "gammaN" : "gamma2");
  std::string name = c.get("op", dflt);
  StageMap sm = iterate(operatorByName(p, u, name), u);
  std::cout << "op=" << name << " carrier=" << u.size()
            << " fixpoint=" << sm.w.size() << " rounds=" << sm.rounds
            << " closed=" << (sm.closed ? "true" : "false") << "\n";
  // One line per member, ascending by stage then by the order.
  std::vector<std::pair<int, Ref>> rows;
  for (auto const& [g, x] : sm.stages) rows.emplace_back(x, g);
  std::sort(rows.begin(), rows.end(), [](auto const& l, auto const& r) {
    if (l.first != r.first) return l.first < r.first;
    return lt(l.second, r.second);
  });
  for (auto const& [x, g] : rows)
    std::cout << "stage=" << x << " " << print(g) << "\n";
  return 0;
}

int cmdEnumerate(Cli const& c, Params const& p) {
  if (!c.has("max-symbols")) throw UsageError("need --max-symbols <B>");
  for (Ref t : carrierOf(c, p)) std::cout << print(t) << "\n";
  return 0;
}

int cmdCheck(Cli const& c, Params const& p) {
  Carrier u = carrierOf(c, p);
  std::string suite = c.get("suite", "all");
  std::vector<std::string> ids;
  if (suite == "all") {
    ids = allCheckIds();
  } else if (suite == "order") {
    ids = {"order-total", "set-order-conventions"};
  } else {
    std::string cur;
    for (char ch : suite + ",") {
      if (ch == ',') {
        if (!cur.empty()) ids.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (ids.empty()) throw UsageError("empty --suite");
  }
  SuiteOptions opt;
  if (char const* env = std::getenv("ODPN_SEED"))
    opt.seed = std::stoull(env, nullptr, 0);
  std::vector<CheckResult> rs = runSuite(p, u, ids, opt);
  bool anyFail = false;
  for (CheckResult const& r : rs) {
    std::cout << formatRecord(r);
    anyFail = anyFail || r.status == CheckStatus::Fail;
  }
  return anyFail ? kExitError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    Cli c = parseArgv(argc, argv);
    Params p = paramsOf(c);
    if (c.verb == "parse") return cmdParse(c, p);
    if (c.verb == "print") return cmdPrint(c, p);
    if (c.verb == "cmp") return cmdCmp(c, p);
    if (c.verb == "validate") return cmdValidate(c, p);
    if (c.verb == "decompose") return cmdDecompose(c, p);
    if (c.verb == "seq") return cmdSeq(c, p);
    if (c.verb == "iterate") return cmdIterate(c, p);
    if (c.verb == "enumerate") return cmdEnumerate(c, p);
    if (c.verb == "check") return cmdCheck(c, p);
    if (c.verb == "--help" || c.verb == "help") {
      std::cout << kUsage;
      return 0;
    }
    throw UsageError("unknown verb: " + c.verb);
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << "\n" << kUsage;
    return kExitError;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
