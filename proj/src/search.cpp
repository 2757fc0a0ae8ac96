#include "ehrstar/search.hpp"

#include <algorithm>

#include "ehrstar/errors.hpp"

namespace ehrstar {

namespace {

// Positions of the first spike, each with the admissible second positions.
struct Group {
  std::int64_t position;
  std::int64_t second_low;
  std::int64_t second_count;
  std::uint64_t size;
};

struct Family {
  std::vector<Group> groups;
  std::uint64_t total = 0;
  IntRange value, second_value;
  bool two_spikes = false;

  SearchCandidate decode(std::uint64_t index) const {
    std::size_t g = 0;
    while (index >= groups[g].size) index -= groups[g++].size;
    const Group& grp = groups[g];
    const auto inner = static_cast<std::uint64_t>(grp.second_count * (two_spikes ? second_value.size() : 1));
    SearchCandidate c;
    c.position = grp.position;
    c.value = value.low + static_cast<std::int64_t>(index / inner);
    if (two_spikes) {
      const std::uint64_t rem = index % inner;
      c.second_position = grp.second_low + static_cast<std::int64_t>(rem / second_value.size());
      c.second_value = second_value.low + static_cast<std::int64_t>(rem % second_value.size());
    }
    return c;
  }
};

Family build_family(const SpikePattern& p) {
  const auto d = static_cast<std::int64_t>(p.dim);
  Family fam;
  fam.value = p.first.value;
  fam.two_spikes = p.second.has_value();
  if (fam.two_spikes) fam.second_value = p.second->value;
  for (std::int64_t pos = std::max<std::int64_t>(1, p.first.position.low);
       pos <= std::min(d, p.first.position.high); ++pos) {
    Group g{pos, 0, 1, 0};
    if (fam.two_spikes) {
      g.second_low = std::max(pos + 1, p.second->position.low);
      g.second_count = std::max<std::int64_t>(0, std::min(d, p.second->position.high) - g.second_low + 1);
      g.size = static_cast<std::uint64_t>(fam.value.size()) * g.second_count * fam.second_value.size();
    } else {
      g.size = static_cast<std::uint64_t>(fam.value.size());
    }
    if (g.size == 0) continue;
    fam.groups.push_back(g);
    fam.total += g.size;
  }
  return fam;
}

}  // namespace

SearchResult search_nonunimodal(const SpikePattern& pattern, std::uint64_t budget) {
  if (pattern.dim < 1) throw PreconditionError("search needs d >= 1");
  if (budget == 0) throw PreconditionError("search budget must be positive");
  const Family fam = build_family(pattern);

  SearchResult result;
  result.family_size = fam.total;
  result.examined = std::min(budget, fam.total);
  result.budget_exhausted = fam.total > budget;

  std::vector<std::pair<std::uint64_t, SearchCandidate>> found;
  const auto n = static_cast<std::int64_t>(result.examined);
#pragma omp parallel
  {
    std::vector<std::pair<std::uint64_t, SearchCandidate>> local;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) {
      SearchCandidate c = fam.decode(static_cast<std::uint64_t>(i));
      IntVector h(pattern.dim + 1, 0);
      h[0] = 1;
      h[static_cast<std::size_t>(c.position)] = static_cast<long>(c.value);
      if (c.second_position) h[static_cast<std::size_t>(*c.second_position)] = static_cast<long>(*c.second_value);
      HStarVector hv = HStarVector::raw(std::move(h));
      FStarVector fv = f_from_h(hv);
      const Unimodality u = unimodality(fv);
      if (u.unimodal || !check_hibi(hv).holds) continue;
      c.first_dip = *u.first_dip;
      c.h_star = std::move(hv);
      c.f_star = std::move(fv);
      local.emplace_back(static_cast<std::uint64_t>(i), std::move(c));
    }
#pragma omp critical
    for (auto& e : local) found.push_back(std::move(e));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& e : found) result.candidates.push_back(std::move(e.second));
  return result;
}

}  // namespace ehrstar
