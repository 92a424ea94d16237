// Placeholder entry point; the command dispatch lands with the CLI module.
#include <cstdio>

int main() {
  std::fprintf(stderr, "stratakit: commands not wired up yet\n");
  return 1;
}
