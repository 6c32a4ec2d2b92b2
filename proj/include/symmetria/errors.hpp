/*
 * Copyright 2026 The Symmetria Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace symmetria {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// A function handed to a numerical routine returned a non-finite value.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, double node) : Error(what), node_(node) {}
    double node() const noexcept { return node_; }

private:
    double node_;
};

class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Argument within pole-rejection distance of a lattice pole.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::complex<double> nearest)
        : Error(what), nearest_(nearest) {}
    std::complex<double> nearest_pole() const noexcept { return nearest_; }

private:
    std::complex<double> nearest_;
};

class CompletenessError : public Error {
public:
    CompletenessError(const std::string& what, std::vector<std::string> missing)
        : Error(what), missing_(std::move(missing)) {}
    const std::vector<std::string>& missing() const noexcept { return missing_; }

private:
    std::vector<std::string> missing_;
};

class CompositionError : public Error {
public:
    using Error::Error;
};

class SingularPointError : public Error {
public:
    using Error::Error;
};

/// No perfect matching exists; carries the vertices left uncovered.
class InfeasibleError : public Error {
public:
    InfeasibleError(const std::string& what, std::vector<int> vertices)
        : Error(what), vertices_(std::move(vertices)) {}
    const std::vector<int>& vertices() const noexcept { return vertices_; }

private:
    std::vector<int> vertices_;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class ProbeError : public Error {
public:
    using Error::Error;
};

/// Bad command-line input: unknown suite, malformed flag value.
class UsageError : public Error {
public:
    using Error::Error;
};

/// A report or export file could not be written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace symmetria
