#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gmod/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"gmod: exact graded-module computations over F_p[x_1..x_n]"};

  std::string session_file;
  std::uint64_t seed = 0;
  int max_degree = 6;
  app.add_option("session", session_file,
                 "session file to run (stdin when omitted)");
  app.add_option("--seed", seed, "seed for randomized searches");
  app.add_option("--max-degree", max_degree,
                 "degree window for degreewise comparisons");
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (session_file.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(session_file);
    if (!in) {
      std::cerr << "cannot open session file: " << session_file << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  gmod::SessionOptions opts;
  opts.seed = seed;
  opts.max_degree = max_degree;
  gmod::SessionResult r = gmod::run_session(text, opts);
  std::cout << r.transcript;
  return r.exit_code;
}
