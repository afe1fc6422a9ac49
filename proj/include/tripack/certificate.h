#ifndef TRIPACK_CERTIFICATE_H_
#define TRIPACK_CERTIFICATE_H_

#include <string>
#include <string_view>

#include "tripack/graph.h"
#include "tripack/packing.h"
#include "tripack/rational.h"

// Text certificates.
//
//   PACKCERT v1
//   graph: n=<n> <colors>
//   claim: pack >= p/q
//   R|B i j k p/q            (one line per triangle)
//
//   COVERCERT v1
//   color: R|B
//   i j p/q                  (one line per edge)
//   claim: nustar <= p/q
namespace tripack {

struct PackCertificate {
  ColoredGraph graph;
  Rational claim;
  FractionalPacking red{EdgeColor::Red, {}};
  FractionalPacking blue{EdgeColor::Blue, {}};

  bool operator==(const PackCertificate&) const = default;
};

struct CoverCertificate {
  FractionalCover cover;
  Rational claim;

  bool operator==(const CoverCertificate&) const = default;
};

// Claim is 3 * (red + blue).
PackCertificate make_pack_certificate(const ColoredGraph& g, const FractionalPacking& red,
                                      const FractionalPacking& blue);
// Claim is the cover's total weight.
CoverCertificate make_cover_certificate(const FractionalCover& cover);

std::string write(const PackCertificate& cert);
std::string write(const CoverCertificate& cert);
PackCertificate parse_pack_certificate(std::string_view text);
CoverCertificate parse_cover_certificate(std::string_view text);

enum class CertificateKind { Pack, Cover };
// Looks at the header line only; throws ParseError on anything else.
CertificateKind certificate_kind(std::string_view text);

struct Verdict {
  bool ok = true;
  std::string violation;  // first violated constraint, empty when ok
};

// Weights in [0, 1], triangles monochromatic of the stated colour, loads at
// most 1, and claim <= 3 * total weight.
Verdict verify(const PackCertificate& cert);
// Non-negative weights, every colour triangle of g covered, and
// claim >= total weight.
Verdict verify(const CoverCertificate& cert, const ColoredGraph& g);

}  // namespace tripack

#endif  // TRIPACK_CERTIFICATE_H_
