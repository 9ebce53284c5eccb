#include "phin/fuzz.hpp"

#include "phin/exact_linalg.hpp"

#include <algorithm>
#include <cstdio>

namespace phin {

namespace {

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

std::string label(char prefix, std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%c%02zu", prefix, i);
  return buf;
}

std::vector<std::size_t> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(v[i - 1], v[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(i) - 1))]);
  }
  return v;
}

EllipticCurveSpec random_elliptic(std::mt19937_64& rng, std::int64_t p) {
  for (;;) {
    EllipticCurveSpec e{p, draw(rng, 0, p - 1), draw(rng, 0, p - 1)};
    try {
      check_curve(e, point_count_bound());
      return e;
    } catch (const CurveError&) {
    }
  }
}

}  // namespace

CurveInstance random_curve_instance(std::mt19937_64& rng, const FuzzBounds& bounds) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 3; p <= bounds.max_prime; ++p)
    if (is_prime(p)) primes.push_back(p);
  if (primes.empty()) throw std::invalid_argument("fuzz: no odd prime within max_prime");
  const std::int64_t p = primes[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(primes.size()) - 1))];
  const std::int64_t f = draw(rng, 1, std::max<std::int64_t>(1, bounds.max_f));

  const auto nv = static_cast<std::size_t>(draw(rng, 1, bounds.max_vertices));
  const std::int64_t min_edges = static_cast<std::int64_t>(nv) - 1;
  const auto ne = static_cast<std::size_t>(draw(rng, min_edges, std::max(min_edges, bounds.max_edges)));

  const std::vector<std::size_t> vertex_names = shuffled(nv, rng);
  const std::vector<std::size_t> edge_names = shuffled(ne, rng);

  std::vector<Vertex> vertices;
  std::map<std::string, ComponentSource> components;
  for (std::size_t i = 0; i < nv; ++i) {
    const std::string id = label('v', vertex_names[i]);
    const std::int64_t genus = draw(rng, 0, bounds.max_genus);
    vertices.push_back({id, genus});
    if (genus == 0) {
      components.emplace(id, GenusZero{});
    } else if (genus == 1) {
      components.emplace(id, random_elliptic(rng, p));
    } else {
      std::vector<WeilMatrix> blocks;
      for (std::int64_t k = 0; k < genus; ++k) blocks.push_back(frobenius_of_elliptic(random_elliptic(rng, p), f));
      components.emplace(id, ExplicitFrobenius{direct_sum(blocks, PrimePower{p, f}).matrix()});
    }
  }

  std::vector<Edge> edges;
  auto add_edge = [&](std::size_t a, std::size_t b) {
    const std::size_t k = edges.size();
    if (draw(rng, 0, 1)) std::swap(a, b);
    edges.push_back({label('e', edge_names[k]), vertices[a].id, vertices[b].id});
  };
  for (std::size_t v = 1; v < nv; ++v) add_edge(v, static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(v) - 1)));
  while (edges.size() < ne) {
    add_edge(static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(nv) - 1)),
             static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(nv) - 1)));
  }

  return CurveInstance{DualGraph(std::move(vertices), std::move(edges)), std::move(components), p, f};
}

std::vector<CurveInstance> fuzz_instances(std::uint64_t seed, std::size_t count,
                                          const FuzzBounds& bounds) {
  std::mt19937_64 rng(seed);
  std::vector<CurveInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_curve_instance(rng, bounds));
  return out;
}

InstanceVerdict evaluate_instance(const CurveInstance& c) {
  InstanceVerdict v;
  try {
    const PhiNModule curve = build_from_curve(c);
    const PhiNModule av = build_from_av(jacobian_data(c));
    v.agreement = modules_equal(curve, av);
    const RelationReport rel = verify_relations(curve);
    v.relations = rel.all_passed();
    v.rank_n_is_b1 = static_cast<std::int64_t>(rank(curve.n)) == betti_one(c.graph);
    v.duality = verify_monodromy_duality(curve) && verify_monodromy_duality(av);
    const HodgeNewtonReport hn = hodge_newton(curve);
    const Rational expected(c.graph.total_genus() + betti_one(c.graph));
    v.endpoints = hn.endpoints_equal && hn.t_newton == expected && Rational(hn.t_hodge) == expected;
    v.newton_symmetric = hn.newton_symmetric;
    v.newton_above_hodge = hn.newton_above_hodge;
  } catch (const std::exception& e) {
    v.error = e.what();
  }
  return v;
}

std::vector<InstanceVerdict> evaluate_all(const std::vector<CurveInstance>& instances,
                                          Execution exec) {
  std::vector<InstanceVerdict> verdicts(instances.size());
  const auto n = static_cast<std::ptrdiff_t>(instances.size());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) verdicts[static_cast<std::size_t>(i)] = evaluate_instance(instances[static_cast<std::size_t>(i)]);
    return verdicts;
  }
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    verdicts[static_cast<std::size_t>(i)] = evaluate_instance(instances[static_cast<std::size_t>(i)]);
  }
  return verdicts;
}

}  // namespace phin
