use crate::groups::Sporadic;

/// One numbered item of the sporadic list: the group and its admissible `π ∩ π(S)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SporadicItem {
    pub number: u32,
    pub group: Sporadic,
    pub sets: &'static [&'static [u64]],
}

const ITEMS: [SporadicItem; 17] = [
    SporadicItem { number: 1, group: Sporadic::M11, sets: &[&[5, 11]] },
    SporadicItem { number: 2, group: Sporadic::M12, sets: &[&[5, 11]] },
    SporadicItem { number: 3, group: Sporadic::M22, sets: &[&[5, 11]] },
    SporadicItem { number: 4, group: Sporadic::M23, sets: &[&[5, 11], &[11, 23]] },
    SporadicItem { number: 5, group: Sporadic::M24, sets: &[&[5, 11], &[11, 23]] },
    SporadicItem { number: 6, group: Sporadic::J1, sets: &[&[3, 5], &[3, 7], &[3, 19], &[5, 11]] },
    SporadicItem { number: 7, group: Sporadic::J4, sets: &[&[5, 7], &[5, 11], &[5, 31], &[7, 29], &[7, 43]] },
    SporadicItem { number: 8, group: Sporadic::ON, sets: &[&[5, 11], &[5, 31]] },
    SporadicItem { number: 9, group: Sporadic::Ly, sets: &[&[11, 67]] },
    SporadicItem { number: 10, group: Sporadic::Ru, sets: &[&[7, 29]] },
    SporadicItem { number: 11, group: Sporadic::Co1, sets: &[&[11, 23]] },
    SporadicItem { number: 12, group: Sporadic::Co2, sets: &[&[11, 23]] },
    SporadicItem { number: 13, group: Sporadic::Co3, sets: &[&[11, 23]] },
    SporadicItem { number: 14, group: Sporadic::Fi23, sets: &[&[11, 23]] },
    SporadicItem { number: 15, group: Sporadic::Fi24, sets: &[&[11, 23]] },
    SporadicItem { number: 16, group: Sporadic::B, sets: &[&[11, 23], &[23, 47]] },
    SporadicItem { number: 17, group: Sporadic::M, sets: &[&[23, 47], &[29, 59]] },
];

pub fn items() -> &'static [SporadicItem] {
    &ITEMS
}
