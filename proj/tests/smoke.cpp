#include <croots/cauchy.hpp>
#include <croots/counting.hpp>
#include <croots/solver.hpp>
#include <cstdio>
int main() {
  using namespace croots;
  auto o = mandelbrot_oracle(3);
  int m = count_roots_isolated(o, Disc(Point(), Real(4L)), mpq_class(2));
  std::printf("count in D(0,4) for Man_3 (deg 7): %d\n", m);
  return m == 7 ? 0 : 1;
}
