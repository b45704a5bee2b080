#include "tesserae/strip.hpp"

#include "tesserae/error.hpp"

namespace tesserae {

StripSolution solve_strip(const TileSet& tiles, int width, const StripOptions& options) {
  TransferAutomaton automaton = trim_reachable(build_automaton(tiles, width));

  // Probe for the column step on a short window first.
  std::size_t columns = options.initial_terms;
  CountSeries counts = series(automaton, columns);
  const int step = detect_step(counts);

  // The resampled sequence is a_t = e^T (T^step)^t e, so its linear
  // complexity never exceeds the state count; 2|S| terms settle it.
  const std::size_t certain = 2 * automaton.size() + 1;
  std::size_t terms = options.initial_terms;
  for (;;) {
    columns = static_cast<std::size_t>(step) * (terms - 1);
    if (counts.terms.size() < columns + 1) counts = series(automaton, columns);
    std::vector<BigInt> resampled = resample(counts, step);
    resampled.resize(terms);
    try {
      const std::size_t confirm = terms >= certain ? 1 : options.confirming_terms;
      LinearRecurrence rec = infer_recurrence(resampled, confirm);
      RationalGF gf = recurrence_to_gf(rec, resampled, step);
      return StripSolution{std::move(automaton), std::move(counts), step,
                           std::move(resampled), std::move(rec), std::move(gf)};
    } catch (const ConvergenceError&) {
      if (terms >= options.max_terms) throw;
      terms *= 2;
    }
  }
}

}  // namespace tesserae
