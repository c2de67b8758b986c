#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace printstiff {

// Root of every error the library throws on purpose.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: parameters out of range, missing files, unknown names.
class ConfigError : public Error
{
public:
    using Error::Error;
};

// L_thickness <= 0 makes the filament section area meaningless.
class DegenerateFilament : public ConfigError
{
public:
    using ConfigError::ConfigError;
};

class InvalidThickness : public ConfigError
{
public:
    using ConfigError::ConfigError;
};

// Anything wrong with the part geometry. Carries the layer index when raised
// from inside a slice stack.
class GeometryError : public Error
{
public:
    explicit GeometryError(const std::string &msg, std::optional<int> layer = std::nullopt)
        : Error(msg), m_layer(layer), m_what(compose(msg, layer)), m_msg(msg)
    {}

    const char *what() const noexcept override { return m_what.c_str(); }
    std::optional<int> layer() const { return m_layer; }
    void set_layer(int layer)
    {
        m_layer = layer;
        m_what  = compose(m_msg, m_layer);
    }

private:
    static std::string compose(const std::string &msg, std::optional<int> layer)
    {
        return layer ? "layer " + std::to_string(*layer) + ": " + msg : msg;
    }

    std::optional<int> m_layer;
    std::string        m_what;
    std::string        m_msg;
};

class MalformedFile : public GeometryError
{
public:
    using GeometryError::GeometryError;
};

class EmptyMesh : public GeometryError
{
public:
    using GeometryError::GeometryError;
};

class NonFinite : public GeometryError
{
public:
    using GeometryError::GeometryError;
};

class DegenerateSlice : public GeometryError
{
public:
    using GeometryError::GeometryError;
};

class OpenLoop : public GeometryError
{
public:
    using GeometryError::GeometryError;
};

// A non-empty contour on which no bead fits.
class ZeroArea : public Error
{
public:
    using Error::Error;
};

// A layer of the area profile carries no material, so the compliance integral diverges.
class ZeroAreaLayer : public Error
{
public:
    explicit ZeroAreaLayer(int layer)
        : Error("layer " + std::to_string(layer) + " has zero deposited area"), m_layer(layer)
    {}
    int layer() const { return m_layer; }

private:
    int m_layer;
};

} // namespace printstiff
