#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace nonevade::cli {

struct Caps {
  std::size_t nonevasive = 12;
  std::size_t game = 16;
  std::size_t collapsible = 1 << 14;
};

struct CapOverrides {
  std::optional<std::size_t> nonevasive;
  std::optional<std::size_t> game;
  std::optional<std::size_t> collapsible;
};

// Flag beats NONEVADE_CAPS beats default. `env` is a comma-separated list
// like "nonevasive=10,game=14,collapsible=4096". Throws std::invalid_argument.
Caps resolve_caps(const CapOverrides& flags, const char* env);

struct RunConfig {
  std::string command;
  std::string input;
  std::string element;
  std::string output;
  std::string cert_path;
  bool exhaustive = false;
  std::optional<std::string> hidden;
  bool json = false;

  // gen
  std::string family;
  std::int64_t n = 0;
  std::int64_t m = 0;
  double edge_probability = 0.3;
  std::uint64_t seed = 1;

  // suite
  std::size_t random_count = 500;

  Caps caps;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv; on --help or a usage error returns the exit code instead.
std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv,
                                                std::ostream& out, std::ostream& err);

}  // namespace nonevade::cli
