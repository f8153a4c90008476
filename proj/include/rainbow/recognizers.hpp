#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rainbow/builders.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

/// One growth step: the gadget (O1, O2 or O3(k)) and the vertex of the
/// pre-step tree it is joined to.
struct TreeCertificateStep {
    GadgetKind op = GadgetKind::o1();
    Vertex attach_at = 0;

    friend bool operator==(const TreeCertificateStep&, const TreeCertificateStep&) = default;
};

/// Replayable construction of a stable tree: a base tree (P3 labeled 0-1-2,
/// or the spider of `build_spider(k)` with k >= 3) followed by growth steps.
struct FamilyTCertificate {
    enum class Base { P3, Spider };

    Base base = Base::P3;
    int spider_legs = 0;
    std::vector<TreeCertificateStep> steps;

    friend bool operator==(const FamilyTCertificate&, const FamilyTCertificate&) = default;
};

struct FamilyTRecognition {
    std::optional<FamilyTCertificate> certificate;
    /// Why the tree was rejected; empty when accepted.
    std::string rejection;
    /// input vertex -> vertex of replay_certificate(*certificate); empty when rejected.
    std::vector<Vertex> vertex_map;

    bool accepted() const noexcept { return certificate.has_value(); }
};

/// Decomposes a tree by stripping pendant gadgets along a diametrical path,
/// checking the W_0 side conditions on each residual tree. Throws NotATree for
/// non-trees and std::invalid_argument for order < 3.
FamilyTRecognition recognize_family_T(const Graph& t, int cap = kDefaultBruteCap);

/// Builds the certificate's tree, checking that every O1 attaches at a W_0
/// vertex and every O2 at a non-W_0 vertex. Throws CertificateError otherwise.
Graph replay_certificate(const FamilyTCertificate& c, int cap = kDefaultBruteCap);

nlohmann::json to_json(const FamilyTCertificate& c);
FamilyTCertificate certificate_from_json(const nlohmann::json& j);

/// A tree seen as the subdivision of `preimage`.
struct SubdivisionPreimage {
    Graph preimage;
    /// Input vertices that are original vertices, ascending; preimage vertex i is originals[i].
    std::vector<Vertex> originals;
    /// Input vertices that subdivide an edge, ascending.
    std::vector<Vertex> subdivision_vertices;
};

struct FamilyFRecognition {
    std::optional<SubdivisionPreimage> preimage;
    std::string rejection;

    bool accepted() const noexcept { return preimage.has_value(); }
};

/// Accepts exactly the subdivisions of nontrivial trees. Throws NotATree for non-trees.
FamilyFRecognition recognize_family_F(const Graph& t);

}  // namespace rainbow
