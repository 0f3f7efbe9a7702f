#include <cstdio>

int main() {
  std::puts("gzl: cli not wired up yet");
  return 1;
}
