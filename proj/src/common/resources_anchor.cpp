#include "gdsl/resources.hpp"
