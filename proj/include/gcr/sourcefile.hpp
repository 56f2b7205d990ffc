#ifndef GCR_SOURCEFILE_HPP
#define GCR_SOURCEFILE_HPP

#include "gcr/steenrod.hpp"

namespace gcr {

struct Diagnostic {
    enum class Severity { Warning, Error };
    Severity severity;
    std::string message;
    size_t line, col;
};

// A parsed declaration file:
//
//   ring NAME = (ZZ|QQ|F<p>) [ var:deg, ... ] ( / ( poly, ... ) )? ;
//   ideal NAME on RING = ( poly, ... ) ;
//   map NAME : RING -> RING = ( poly, ... ) ;
//   sq NAME on RING = ( var -> poly, ... ) ;
//
// `#` starts a line comment. Names are declared before use and share one
// namespace. Inhomogeneous relations parse with a warning; graded
// operations reject them later.
class SourceFile {
public:
    struct RingDecl {
        std::string name;
        QuotientPresentation pres;
        size_t line;
    };
    struct IdealDecl {
        std::string name;
        std::string ring;
        Ideal ideal;
        size_t line;
    };
    struct MapDecl {
        std::string name;
        std::string source_ring, target_ring;
        RingMap map;
        size_t line;
    };
    struct SqDecl {
        std::string name;
        std::string ring;
        SteenrodAction action;
        size_t line;
    };

    std::vector<RingDecl> rings;
    std::vector<IdealDecl> ideals;
    std::vector<MapDecl> maps;
    std::vector<SqDecl> sqs;
    std::vector<Diagnostic> warnings;

    const RingDecl& ring(const std::string& name) const;
    const IdealDecl& ideal(const std::string& name) const;
    const MapDecl& map(const std::string& name) const;
    const SqDecl& sq(const std::string& name) const;
};

SourceFile parse_source(const std::string& text);

// Canonical text form; parse_source(print_source(f)) reproduces the same
// declarations.
std::string print_source(const SourceFile& f);

}  // namespace gcr

#endif
