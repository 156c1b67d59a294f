#ifndef THOTH_RDF_VOCAB_HPP
#define THOTH_RDF_VOCAB_HPP

#include <string>

// Well-known namespaces and the handful of IRIs the engine itself
// needs to recognize. Everything else stays in the data/rule files.
namespace thoth::rdf::vocab {

inline const std::string kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string kSosaNs = "http://www.w3.org/ns/sosa/";
inline const std::string kProvNs = "http://www.w3.org/ns/prov#";
inline const std::string kShaclNs = "http://www.w3.org/ns/shacl#";
inline const std::string kSsrNs = "http://example.org/ssr#";
inline const std::string kExNs = "http://example.org/ns#";

inline const std::string kRdfType = kRdfNs + "type";
inline const std::string kResultTime = kSosaNs + "resultTime";
inline const std::string kIsSampleOf = kSosaNs + "isSampleOf";

inline const std::string kShNodeShape = kShaclNs + "NodeShape";
inline const std::string kShRule = kShaclNs + "rule";
inline const std::string kShCqelsRule = kShaclNs + "CQELSRule";
inline const std::string kShConstruct = kShaclNs + "construct";
inline const std::string kShPrefixes = kShaclNs + "prefixes";
inline const std::string kSsrWeight = kSsrNs + "weight";

// Geometry/appearance annotations used by the tracking builtins.
inline const std::string kBoxX = kExNs + "x";
inline const std::string kBoxY = kExNs + "y";
inline const std::string kBoxW = kExNs + "w";
inline const std::string kBoxH = kExNs + "h";
inline const std::string kAppearance = kExNs + "appearance";

} // namespace thoth::rdf::vocab

#endif
