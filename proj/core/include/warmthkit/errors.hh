#ifndef WARMTHKIT_ERRORS_HH
#define WARMTHKIT_ERRORS_HH

#include <stdexcept>
#include <string>

namespace warmthkit
{
    /// Bad parameters or a graph that violates an operation's precondition.
    class InputError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Malformed graph file; carries the 1-based line number.
    class ParseError : public InputError
    {
    private:
        int _line;

    public:
        ParseError(int line, const std::string & what) :
            InputError("line " + std::to_string(line) + ": " + what),
            _line(line)
        {
        }

        auto line() const -> int { return _line; }
    };

    /// Vertex index outside 0..n-1.
    class RangeError : public std::out_of_range
    {
    public:
        using std::out_of_range::out_of_range;
    };

    /// The requested computation exceeds a configured size cap.
    class CapacityError : public std::length_error
    {
    public:
        using std::length_error::length_error;
    };

    /// A complex or certificate is internally inconsistent.
    class StructuralError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };
}

#endif
