#pragma once

#include "sgit/rational.hpp"
#include "sgit/rootsys.hpp"
#include "sgit/weyl.hpp"
#include "sgit/git.hpp"
#include "sgit/catalog.hpp"
#include "sgit/quotient.hpp"
#include "sgit/io.hpp"
#include "sgit/verify.hpp"
