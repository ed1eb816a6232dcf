#include <iostream>
#include <variant>

#include "cli.hpp"

int main(int argc, char** argv) {
  auto parsed = nonevade::cli::parse_command_line(argc, argv, std::cout, std::cerr);
  if (auto* code = std::get_if<int>(&parsed)) return *code;
  return nonevade::cli::run(std::get<nonevade::cli::RunConfig>(parsed), std::cout, std::cerr);
}
