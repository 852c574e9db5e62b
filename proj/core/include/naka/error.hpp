#ifndef NAKA_ERROR_HPP
#define NAKA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace naka {

/// Error category, mirrored in the CLI exit codes: schema errors exit 1,
/// semantic errors 2, theorem violations (bug canaries) 3.
enum class ErrorKind { schema, semantic, theorem };

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), kind_(kind), name_(std::move(name)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

  private:
    ErrorKind kind_;
    std::string name_;
};

inline Error semantic_error(std::string name, const std::string& message) {
    return Error(ErrorKind::semantic, std::move(name), message);
}
inline Error schema_error(const std::string& message) {
    return Error(ErrorKind::schema, "SchemaError", message);
}
inline Error theorem_violation(const std::string& message) {
    return Error(ErrorKind::theorem, "TheoremViolation", message);
}

}  // namespace naka

#endif
