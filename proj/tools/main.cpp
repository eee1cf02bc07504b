#include <string>
#include <vector>

#include "wtomo/cli.hpp"

int main(int argc, char** argv) {
  return wtomo::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
