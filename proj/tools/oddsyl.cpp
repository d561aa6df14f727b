#include "cgt/group.hpp"

#include <cstdio>

int main() {
  std::puts("oddsyl: command-line interface not wired up yet");
  return 1;
}
