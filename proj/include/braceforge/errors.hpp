#ifndef BRACEFORGE_ERRORS_HPP
#define BRACEFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braceforge {

// Broad failure classes. The command line driver maps these to exit codes:
// validation failures -> 2, resource bounds -> 3, parse errors -> 4.
enum class ErrorKind { Validation, Resource, Parse };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg)
        : Error(ErrorKind::Validation, msg) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& msg)
        : Error(ErrorKind::Resource, msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg)
        : Error(ErrorKind::Parse, msg) {}
};

}  // namespace braceforge

#endif
