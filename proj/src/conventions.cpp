#include "dybx/conventions.hpp"

namespace dybx {

Conventions& conventions()
{
    static Conventions c;
    return c;
}

std::string Conventions::describe() const
{
    return std::string("wedge=") + (wedgeFull ? "full" : "half") + " qdybe=" + (qdybeFelder ? "felder" : "mirrored") +
           " limit-sign=" + (limitSign > 0 ? "+1" : "-1") +
           " x-order=" + (xYPowersLeft ? "y-left" : "y-right");
}

} // namespace dybx
