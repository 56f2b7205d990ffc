#ifndef GCR_ERRORS_HPP
#define GCR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gcr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingMismatch : Error {
    RingMismatch() : Error("operands belong to different rings") {}
    explicit RingMismatch(const std::string& what) : Error(what) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable: " + name) {}
};

struct NotAField : Error {
    explicit NotAField(const std::string& what = "operation requires field coefficients") : Error(what) {}
};

struct NotPrime : Error {
    explicit NotPrime(long p) : Error("not a prime: " + std::to_string(p)) {}
};

struct InhomogeneousIdeal : Error {
    explicit InhomogeneousIdeal(const std::string& what) : Error(what) {}
};

struct InhomogeneousImage : Error {
    explicit InhomogeneousImage(const std::string& what) : Error(what) {}
};

struct NotHomogeneous : Error {
    explicit NotHomogeneous(const std::string& what = "polynomial is not homogeneous") : Error(what) {}
};

struct SourceNotFree : Error {
    explicit SourceNotFree(const std::string& what) : Error(what) {}
};

struct NotWellDefined : Error {
    explicit NotWellDefined(const std::string& what) : Error(what) {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& what) : Error(what) {}
};

struct TableRangeExceeded : Error {
    explicit TableRangeExceeded(const std::string& what) : Error(what) {}
};

struct UnknownScenario : Error {
    explicit UnknownScenario(const std::string& name) : Error("unknown scenario: " + name) {}
};

struct Timeout : Error {
    explicit Timeout(const std::string& what = "deadline exceeded") : Error(what) {}
};

// Parse errors always carry a source position (1-based).
struct ParseError : Error {
    size_t line, col;
    ParseError(size_t line_, size_t col_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

}  // namespace gcr

#endif
