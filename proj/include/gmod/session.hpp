#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gmod/cmfication.hpp"
#include "gmod/text.hpp"

namespace gmod {

struct SessionOptions {
  std::uint64_t seed = 0;
  int max_degree = 6;
};

/// Replayable, order-sensitive command session over a single ambient ring.
/// Statements: `ring`, `ideal`, `module`, `map`, `art` bindings, and verbs.
class Session {
 public:
  explicit Session(SessionOptions opts = {});

  /// Execute one statement; appends rendered output lines to `out`.
  void execute_line(const std::string& line, int line_number,
                    std::vector<std::string>& out);

  const RingPtr& ring() const { return ring_; }

 private:
  struct MapBinding {
    std::string source_name;
    std::string target_name;
    ModuleMap map;
  };

  SessionOptions opts_;
  RingPtr ring_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, FPModule> modules_;
  std::map<std::string, MapBinding> maps_;
  std::map<std::string, ArtinianRep> arts_;
  bool has_last_module_ = false;
  FPModule last_module_;  // bound to `_` by module-valued verbs

  void require_ring(int line) const;
  FPModule resolve_module(const std::string& name, int line) const;
  ArtinianRep resolve_art(const std::string& name, int line) const;
  void bind_last(const FPModule& M);
  void run_verb(const std::string& verb, const std::string& args, int line,
                std::vector<std::string>& out);
};

struct SessionResult {
  int exit_code = 0;  // 0 ok, 1 command error, 2 parse error
  std::string transcript;
};

/// Run a whole session; the transcript ends with the error line when a
/// statement fails (exit codes: 1 command error, 2 parse error).
SessionResult run_session(const std::string& text, SessionOptions opts = {});

}  // namespace gmod
