#include <cstdio>

int main() {
  std::puts("toprec: placeholder");
  return 0;
}
