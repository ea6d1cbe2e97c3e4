from zx_axiom_verifier.arithmetic.rational_angle import RationalAngle, angle_normalize, radians_close, rational_angles, ZERO, PI, HALF_PI
from zx_axiom_verifier.arithmetic.cyclotomic import Cyclotomic, root_of_unity, unit_sum, cyclotomic_polynomial, MAX_CYCLOTOMIC_ORDER
