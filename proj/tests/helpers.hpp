// Shared fixtures for the test suite: cached carriers and a CLI subprocess
// runner. Carriers are enumerated once per process; the sizes here are the
// frozen fragment sizes the tests pin.
#pragma once

#include <odpn/odpn.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace tst {

using namespace odpn;

inline Params piN(int n = 4) { return Params{System::OdPiN, n}; }
inline Params m32() { return Params{System::OdM32, 4}; }
inline Params odSuper() { return Params{System::OdSuper, 4}; }

inline Carrier const& carrierPiN7() {
  static Carrier u = enumerateValid(piN(), 7);
  return u;
}

inline Carrier const& carrierPiN6() {
  static Carrier u = enumerateValid(piN(), 6);
  return u;
}

inline Carrier const& carrierN6() {
  static Carrier u = enumerateValid(piN(6), 6);
  return u;
}

inline Carrier const& carrierM328() {
  static Carrier u = enumerateValid(m32(), 8);
  return u;
}

inline Carrier const& carrierOd6() {
  static Carrier u = enumerateValid(odSuper(), 6);
  return u;
}

inline Ref P(std::string const& text) { return parse(text); }

// The N=4 base quadruple term.
inline Ref dqBase() { return P("d(pi;[3,pi,pi,0];0)"); }

struct CliResult {
  int code;
  std::string out;
};

// Runs the built CLI with a shell-quoted argument string, capturing stdout
// and stderr together. `env` is prepended verbatim (e.g. "ODPN_SEED=7 ").
inline CliResult runCli(std::string const& args, std::string const& env = "") {
  std::string cmd = env + std::string(ODPN_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed: " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int raw = ::pclose(p);
  int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return {code, out};
}

inline std::string readFile(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string s((std::istreambuf_iterator<char>(in)),
                std::istreambuf_iterator<char>());
  return s;
}

}  // namespace tst
