#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "khw/classical.hpp"
#include "khw/diagram.hpp"
#include "khw/homology.hpp"

namespace khw {

/// Certificate tree for membership in the quasi-alternating set: internal
/// nodes resolve a crossing into two certified children with additive
/// determinants, leaves are R1/R2-trivial unknots or reduced alternating
/// diagrams.
struct QACertificate {
  enum Kind { Resolution, UnknotLeaf, AlternatingLeaf };
  Kind kind = UnknotLeaf;
  LinkDiagram diagram; // after greedy R-move reduction
  long long det = 0;
  int crossing = -1; // Resolution nodes: the resolved crossing in `diagram`
  std::vector<QACertificate> children;

  int nodes() const {
    int n = 1;
    for (const auto& c : children) n += c.nodes();
    return n;
  }
};

namespace detail_qa {

inline bool has_nugatory(const LinkDiagram& d) {
  FaceData fd = face_data(d);
  for (int c = 0; c < d.crossing_count(); ++c)
    if (fd.quadrant_face[4 * c + 0] == fd.quadrant_face[4 * c + 2] ||
        fd.quadrant_face[4 * c + 1] == fd.quadrant_face[4 * c + 3])
      return true;
  return false;
}

/// Unknot certificate for diagrams the greedy moves cannot untangle: a knot
/// diagram with determinant one whose reduced homology has total rank one is
/// the unknot (Khovanov homology detects the unknot).  Determinant-one knots
/// are exactly where the resolution recursion has no additive split, so this
/// closes the base case.
inline bool certified_unknot(const LinkDiagram& d) {
  if (d.component_count() != 1) return false;
  if (d.crossing_count() == 0) return true;
  if (determinant(d) != 1) return false;
  LinkDiagram based = d;
  based.basepoint = d.edge_labels().at(0);
  return reduced_homology(based, Ring::q()).total_rank() == 1;
}

struct SearchState {
  // canonical key -> certificate, or the depth at which the search gave up
  std::map<std::string, QACertificate> certified;
  std::map<std::string, int> unknown_at;
};

inline std::optional<QACertificate> search(const LinkDiagram& d0, int depth, SearchState& st) {
  LinkDiagram d = simplify_r_moves(d0);
  if (d.crossing_count() == 0) {
    if (d.component_count() != 1) return std::nullopt; // split unlink, det 0
    QACertificate leaf;
    leaf.kind = QACertificate::UnknotLeaf;
    leaf.diagram = d;
    leaf.det = 1;
    return leaf;
  }
  if (!is_connected(d)) return std::nullopt;
  long long det = determinant(d);
  if (det <= 0) return std::nullopt;
  if (det == 1) {
    // only the unknot has determinant one inside the quasi-alternating set
    if (!certified_unknot(d)) return std::nullopt;
    QACertificate leaf;
    leaf.kind = QACertificate::UnknotLeaf;
    leaf.diagram = d;
    leaf.det = 1;
    return leaf;
  }
  std::string key = d.canonical_key();
  auto hit = st.certified.find(key);
  if (hit != st.certified.end()) return hit->second;
  if (is_alternating(d) && !has_nugatory(d)) {
    QACertificate leaf;
    leaf.kind = QACertificate::AlternatingLeaf;
    leaf.diagram = d;
    leaf.det = det;
    st.certified[key] = leaf;
    return leaf;
  }
  auto miss = st.unknown_at.find(key);
  if (miss != st.unknown_at.end() && miss->second >= depth) return std::nullopt;
  if (depth <= 0) {
    st.unknown_at[key] = depth;
    return std::nullopt;
  }

  // candidate crossings with additive positive determinants, best balanced
  // product first
  struct Candidate {
    int x;
    long long d0, d1;
  };
  std::vector<Candidate> cands;
  std::vector<LinkDiagram> res0(d.crossing_count()), res1(d.crossing_count());
  for (int x = 0; x < d.crossing_count(); ++x) {
    res0[x] = smooth(d, x, 0);
    res1[x] = smooth(d, x, 1);
    long long d0 = determinant(res0[x]);
    long long d1 = determinant(res1[x]);
    if (d0 > 0 && d1 > 0 && d0 + d1 == det) cands.push_back({x, d0, d1});
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return a.d0 * a.d1 > b.d0 * b.d1;
  });
  for (const auto& c : cands) {
    auto c0 = search(res0[c.x], depth - 1, st);
    if (!c0) continue;
    auto c1 = search(res1[c.x], depth - 1, st);
    if (!c1) continue;
    QACertificate node;
    node.kind = QACertificate::Resolution;
    node.diagram = d;
    node.det = det;
    node.crossing = c.x;
    node.children.push_back(std::move(*c0));
    node.children.push_back(std::move(*c1));
    st.certified[key] = node;
    return node;
  }
  st.unknown_at[key] = depth;
  return std::nullopt;
}

} // namespace detail_qa

struct QAResult {
  bool certified = false;
  std::optional<QACertificate> certificate;
};

/// Search for a quasi-alternating certificate.  Certified results carry a
/// fully validated tree; anything else is Unknown (the recursion cannot
/// disprove membership, and the greedy unknot base case is incomplete).
inline QAResult qa_search(const LinkDiagram& d, int depth_limit = 64) {
  detail_qa::SearchState st;
  QAResult out;
  auto cert = detail_qa::search(d, depth_limit, st);
  if (cert) {
    out.certified = true;
    out.certificate = std::move(*cert);
  }
  return out;
}

/// Independent re-validation of a certificate: leaf conditions, determinant
/// additivity, and that the children really are the two resolutions.
inline bool validate_certificate(const QACertificate& cert) {
  if (determinant(cert.diagram) != cert.det || cert.det <= 0) return false;
  switch (cert.kind) {
    case QACertificate::UnknotLeaf: {
      LinkDiagram s = simplify_r_moves(cert.diagram);
      if (s.crossing_count() == 0 && s.component_count() == 1) return true;
      return detail_qa::certified_unknot(s);
    }
    case QACertificate::AlternatingLeaf:
      return is_alternating(cert.diagram) && is_connected(cert.diagram) &&
             !detail_qa::has_nugatory(cert.diagram) && cert.children.empty();
    case QACertificate::Resolution: {
      if (cert.children.size() != 2) return false;
      if (cert.crossing < 0 || cert.crossing >= cert.diagram.crossing_count()) return false;
      for (int i = 0; i < 2; ++i) {
        LinkDiagram res = simplify_r_moves(smooth(cert.diagram, cert.crossing, i));
        if (res.canonical_key() != cert.children[i].diagram.canonical_key()) return false;
        if (!validate_certificate(cert.children[i])) return false;
      }
      return cert.det == cert.children[0].det + cert.children[1].det;
    }
  }
  return false;
}

enum class QAObstruction { NotQA, Inconclusive };

/// Reduced-width obstruction: a quasi-alternating link has reduced width one,
/// concentrated in delta = -signature.  Width one without that concentration,
/// or any wider support, rules membership out; width one at the right delta
/// proves nothing.
inline QAObstruction qa_obstruction(const LinkDiagram& d, const HomologyOptions& opt = {}) {
  LinkDiagram based = d;
  if (based.basepoint < 0) based.basepoint = based.edge_labels().at(0);
  BigradedGroups h = reduced_homology(based, Ring::z(), opt);
  auto dt = h.delta_table();
  if (dt.size() != 1) return QAObstruction::NotQA;
  if (dt.begin()->first != -signature(d)) return QAObstruction::NotQA;
  return QAObstruction::Inconclusive;
}

} // namespace khw
