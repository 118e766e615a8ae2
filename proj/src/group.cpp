#include "ncball/group.hpp"

#include <cmath>
#include <stdexcept>

namespace ncball {

namespace {

bool matches_any(const MoebiusMap& m, const std::vector<GroupElement>& seen,
                 double tol) {
  for (const auto& e : seen)
    if (map_distance(m, e.map) <= tol) return true;
  return false;
}

}  // namespace

EnumerationResult enumerate_elements(const GroupPresentation& g, int max_len,
                                     double dedup_tol) {
  if (max_len < 0)
    throw std::invalid_argument("enumerate_elements: max_len >= 0 required");
  for (const auto& gen : g.generators)
    if (gen.dim() != g.n)
      throw std::invalid_argument("enumerate_elements: generator dimension mismatch");

  EnumerationResult out;
  out.requested_max_len = max_len;

  // Expanded alphabet: generators plus inverses, skipping inverses that
  // duplicate an existing letter (self-inverse generators).
  std::vector<MoebiusMap> letters;
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    letters.push_back(g.generators[i]);
    out.alphabet.push_back("g" + std::to_string(i + 1));
    MoebiusMap inv = inverse(g.generators[i]);
    bool duplicate = false;
    for (const auto& known : letters)
      if (map_distance(inv, known) <= dedup_tol) duplicate = true;
    if (!duplicate) {
      letters.push_back(inv);
      out.alphabet.push_back("g" + std::to_string(i + 1) + "^-1");
    }
  }

  out.elements.push_back({{}, MoebiusMap::identity(g.n), 0});
  std::size_t frontier_begin = 0;
  for (int shell = 1; shell <= max_len; ++shell) {
    const std::size_t frontier_end = out.elements.size();
    for (std::size_t p = frontier_begin; p < frontier_end; ++p)
      for (std::size_t a = 0; a < letters.size(); ++a) {
        MoebiusMap candidate = compose(out.elements[p].map, letters[a]);
        if (matches_any(candidate, out.elements, dedup_tol)) {
          ++out.collisions;
          continue;
        }
        std::vector<int> word = out.elements[p].word;
        word.push_back(static_cast<int>(a));
        out.elements.push_back({std::move(word), std::move(candidate), shell});
      }
    if (out.elements.size() == frontier_end) {
      out.exhausted = true;  // no new elements: the group is finite
      break;
    }
    frontier_begin = frontier_end;
  }
  return out;
}

double Orbit::max_radius() const {
  double r = 0.0;
  for (const auto& p : points) r = std::max(r, p.norm());
  return r;
}

Orbit orbit_of_origin(const std::vector<GroupElement>& elements,
                      double dedup_tol) {
  Orbit orbit;
  orbit.dedup_tol = dedup_tol;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Point image = apply(elements[i].map, Point::origin(elements[i].map.dim()));
    bool known = false;
    for (const auto& p : orbit.points)
      if (pseudo_distance(image, p) <= dedup_tol) {
        known = true;
        break;
      }
    if (known) continue;
    orbit.points.push_back(image);
    orbit.shells.push_back(elements[i].shell);
    orbit.element_index.push_back(i);
  }
  return orbit;
}

BlaschkeReport blaschke_report(const EnumerationResult& enumeration,
                               double margin) {
  BlaschkeReport report;
  report.exhausted = enumeration.exhausted;
  if (enumeration.elements.empty()) return report;

  int max_shell = 0;
  for (const auto& e : enumeration.elements)
    max_shell = std::max(max_shell, e.shell);
  report.shells.resize(static_cast<std::size_t>(max_shell) + 1);
  for (int k = 0; k <= max_shell; ++k)
    report.shells[static_cast<std::size_t>(k)].len = k;
  for (const auto& e : enumeration.elements) {
    auto& stat = report.shells[static_cast<std::size_t>(e.shell)];
    ++stat.count;
    stat.term_sum += 1.0 - apply(e.map, Point::origin(e.map.dim())).norm();
  }

  double running = 0.0;
  for (const auto& stat : report.shells) {
    running += stat.term_sum;
    report.partial_sums.push_back(running);
  }
  report.total = running;
  for (std::size_t k = 0; k + 1 < report.shells.size(); ++k)
    if (report.shells[k].term_sum > 0.0)
      report.decay_ratios.push_back(report.shells[k + 1].term_sum /
                                    report.shells[k].term_sum);

  if (enumeration.exhausted) {
    report.verdict = Verdict::Convergent;
    report.extrapolated_sum = report.total;
    return report;
  }

  // Least-squares line through (k, log S_k) over nonempty shells k >= 1.
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 1; k < report.shells.size(); ++k)
    if (report.shells[k].term_sum > 0.0)
      pts.emplace_back(static_cast<double>(k), std::log(report.shells[k].term_sum));
  if (pts.size() < 2) {
    report.verdict = Verdict::Undecided;
    return report;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(pts.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double ratio = std::exp(slope);
  report.fitted_ratio = ratio;
  if (ratio <= 1.0 - margin) {
    report.verdict = Verdict::Convergent;
    const double last = report.shells.back().term_sum;
    report.extrapolated_sum = report.total + last * ratio / (1.0 - ratio);
  } else if (ratio >= 1.0 + margin) {
    report.verdict = Verdict::Divergent;
  } else {
    report.verdict = Verdict::Undecided;
  }
  return report;
}

CheckResult stabilizer_check(const MoebiusMap& candidate, const Orbit& orbit,
                             double core_radius, double tol) {
  if (orbit.points.empty())
    throw std::invalid_argument("stabilizer_check: empty orbit");
  const double region = orbit.max_radius();
  bool exited = false;
  for (const auto& p : orbit.points) {
    if (p.norm() > core_radius + 1e-15) continue;
    const Point image = apply(candidate, p);
    double best = 2.0;
    for (const auto& q : orbit.points)
      best = std::min(best, pseudo_distance(image, q));
    if (best <= tol) continue;
    if (image.norm() > region + tol) {
      exited = true;  // left the enumerated region: no evidence either way
      continue;
    }
    return CheckResult::Fail;
  }
  return exited ? CheckResult::Undecided : CheckResult::Pass;
}

double default_core_radius(const Orbit& orbit) {
  double r = 0.0;
  for (std::size_t i = 0; i < orbit.points.size(); ++i)
    if (orbit.shells[i] <= 2) r = std::max(r, orbit.points[i].norm());
  return r;
}

Complex dual_action_eval(const MoebiusMap& gamma, const NcPoly& f,
                         const Point& lambda) {
  return eval_scalar(f, apply(inverse(gamma), lambda));
}

Complex dual_action_eval(const MoebiusMap& gamma, const BallFunction& f,
                         const Point& lambda) {
  return f.evaluate(apply(inverse(gamma), lambda));
}

}  // namespace ncball
