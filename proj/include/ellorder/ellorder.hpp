#pragma once

#include "ellorder/error.hpp"
#include "ellorder/partitions.hpp"
#include "ellorder/weyl.hpp"
#include "ellorder/classposet.hpp"
#include "ellorder/unipotent.hpp"
#include "ellorder/lusztig.hpp"
