#include "slackcert/polytope/chain.hpp"

#include <future>

#include "slackcert/polytope/synth.hpp"

namespace slackcert {

bool ChainReport::ok() const {
  for (const auto& item : items) {
    if (!item.ok) return false;
  }
  return true;
}

std::vector<std::string> ChainReport::failing() const {
  std::vector<std::string> out;
  for (const auto& item : items) {
    if (!item.ok) out.push_back(item.id);
  }
  return out;
}

namespace {

ChainItem certify(const ChainPoint& p, const IHPolytope& h) {
  auto r = member_certified(h, p.x, p.symbolic_zero);
  return {p.id, r.status, r.values, r.status == p.expected};
}

}  // namespace

ChainReport containment_chain(const std::vector<ChainPoint>& p_points, const IHPolytope& delta,
                              const std::vector<ChainPoint>& delta_vertices, const HPolytope& q_facets,
                              const std::vector<TetraPoint>& tetra_points) {
  const IHPolytope q = to_interval(q_facets);
  std::vector<std::future<ChainItem>> jobs;
  for (const auto& p : p_points) jobs.push_back(std::async(std::launch::async, [&p, &delta] { return certify(p, delta); }));
  for (const auto& p : delta_vertices) jobs.push_back(std::async(std::launch::async, [&p, &q] { return certify(p, q); }));
  ChainReport report;
  for (auto& j : jobs) report.items.push_back(j.get());
  for (const auto& t : tetra_points) {
    ChainItem item;
    item.id = t.id;
    auto bary = slice_barycentric(t.tetra, t.slice, t.x);
    bool inside = true;
    bool outside = false;
    for (const auto& b : bary) {
      item.values.push_back(b);
      inside = inside && b.positive();
      outside = outside || b.negative();
    }
    item.status = inside ? CertifiedMembership::Inside : outside ? CertifiedMembership::Outside : CertifiedMembership::Unknown;
    item.ok = inside;
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace slackcert
