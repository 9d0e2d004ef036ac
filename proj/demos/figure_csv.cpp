// Emit the fixed-lower-gap preset sweep as CSV on stdout; pipe it into any
// plotting tool to see the engine region coincide with the majorization
// region.

#include <iostream>

#include "qotto/sweep.hpp"

int main() {
  const auto rows = qotto::run_sweep(qotto::figure_spec(qotto::FigurePreset::fig6));
  std::cout << qotto::to_csv(rows);
  return 0;
}
