#pragma once

#include <stdexcept>
#include <string>

namespace semicut {

/** Base class for all semicut errors. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/** Instance validation failure; carries the offending vertices. */
class ValidationError : public Error {
public:
    enum class Kind {
        LoopPresent,       // arcs[v][v] set
        MissingArcPair,    // neither (u,v) nor (v,u) present
        WeightBelowOne,    // weight defined but < 1
        WeightOnMissingArc // weight defined where no arc exists
    };

    ValidationError(Kind kind, int u, int v, const std::string& msg)
        : Error(msg), kind(kind), u(u), v(v) {}

    Kind kind;
    int u;
    int v;
};

/** Text-format parse failure with 1-based line/column position. */
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + msg),
          line(line), column(column) {}

    int line;
    int column;
};

class InvalidParameterError : public Error {
public:
    using Error::Error;
};

class WeightedCalledOnUnweightedError : public Error {
public:
    WeightedCalledOnUnweightedError()
        : Error("weighted evaluation requested on an unweighted instance") {}
};

class InstanceTooLargeForOracleError : public Error {
public:
    explicit InstanceTooLargeForOracleError(int n, int limit)
        : Error("instance with " + std::to_string(n) +
                " vertices exceeds the brute-force limit of " + std::to_string(limit)) {}
};

class MalformedSolutionError : public Error {
public:
    using Error::Error;
};

/** Cut-graph search invoked on an enumeration that lacks (∅,V) or (V,∅);
 *  only possible when a CapExceeded cut set is passed in, which violates
 *  the caller contract. */
class SourceOrSinkMissingError : public Error {
public:
    SourceOrSinkMissingError() : Error("cut graph is missing its source or sink cut") {}
};

} // namespace semicut
