use super::GadgetError;
use crate::geom::GeometricInstance;

pub fn realize_co_cycles_disks(
    _evens: &[usize],
    _odd: Option<usize>,
) -> Result<GeometricInstance, GadgetError> {
    unimplemented!()
}
