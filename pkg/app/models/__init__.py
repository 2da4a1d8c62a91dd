from .bott_matrix import BottMatrix, Permutation, TypeSignature
from .ring_element import GeneratorMap, RingElement
from .motion import AffineMotion, GroupWord
from .monomorphism import CocycleTable, ExtensionVerdict, MonomorphismData
from .cohomology import CochainComplex, SignCharacter, SmithForm
from .report import ClassEntry, ClassReport
