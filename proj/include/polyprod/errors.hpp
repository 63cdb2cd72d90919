#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polyprod/mask.hpp"

namespace polyprod {

// The decomposition applies only to complexes without ghost vertices.
class GhostVertexError : public std::runtime_error {
public:
    GhostVertexError(int vertex, std::string what) : std::runtime_error(std::move(what)), vertex_(vertex) {}
    int vertex() const { return vertex_; }

private:
    int vertex_;
};

// Rejection witness: a missing face with three or more elements.
class NotFlagError : public std::runtime_error {
public:
    NotFlagError(Mask witness, std::string what) : std::runtime_error(std::move(what)), witness_(witness) {}
    Mask witness() const { return witness_; }

private:
    Mask witness_;
};

// Rejection witness: a chordless induced cycle of length >= 4 in the
// 1-skeleton.
class NotChordalError : public std::runtime_error {
public:
    NotChordalError(std::vector<int> cycle, std::string what)
        : std::runtime_error(std::move(what)), cycle_(std::move(cycle)) {}
    const std::vector<int>& cycle() const { return cycle_; }

private:
    std::vector<int> cycle_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, std::string what) : std::runtime_error(std::move(what)), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace polyprod
