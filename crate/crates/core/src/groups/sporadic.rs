use std::fmt;
use std::str::FromStr;

use crate::{Error, Natural};

/// The 26 sporadic groups together with the Tits group `2F4(2)'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sporadic {
    M11,
    M12,
    M22,
    M23,
    M24,
    J1,
    J2,
    J3,
    J4,
    Co1,
    Co2,
    Co3,
    Fi22,
    Fi23,
    Fi24,
    HS,
    McL,
    He,
    Ru,
    Suz,
    ON,
    HN,
    Ly,
    Th,
    B,
    M,
    Tits,
}

impl Sporadic {
    pub const ALL: [Sporadic; 27] = [
        Sporadic::M11,
        Sporadic::M12,
        Sporadic::M22,
        Sporadic::M23,
        Sporadic::M24,
        Sporadic::J1,
        Sporadic::J2,
        Sporadic::J3,
        Sporadic::J4,
        Sporadic::Co1,
        Sporadic::Co2,
        Sporadic::Co3,
        Sporadic::Fi22,
        Sporadic::Fi23,
        Sporadic::Fi24,
        Sporadic::HS,
        Sporadic::McL,
        Sporadic::He,
        Sporadic::Ru,
        Sporadic::Suz,
        Sporadic::ON,
        Sporadic::HN,
        Sporadic::Ly,
        Sporadic::Th,
        Sporadic::B,
        Sporadic::M,
        Sporadic::Tits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sporadic::M11 => "M11",
            Sporadic::M12 => "M12",
            Sporadic::M22 => "M22",
            Sporadic::M23 => "M23",
            Sporadic::M24 => "M24",
            Sporadic::J1 => "J1",
            Sporadic::J2 => "J2",
            Sporadic::J3 => "J3",
            Sporadic::J4 => "J4",
            Sporadic::Co1 => "Co1",
            Sporadic::Co2 => "Co2",
            Sporadic::Co3 => "Co3",
            Sporadic::Fi22 => "Fi22",
            Sporadic::Fi23 => "Fi23",
            Sporadic::Fi24 => "Fi24'",
            Sporadic::HS => "HS",
            Sporadic::McL => "McL",
            Sporadic::He => "He",
            Sporadic::Ru => "Ru",
            Sporadic::Suz => "Suz",
            Sporadic::ON => "ON",
            Sporadic::HN => "HN",
            Sporadic::Ly => "Ly",
            Sporadic::Th => "Th",
            Sporadic::B => "B",
            Sporadic::M => "M",
            Sporadic::Tits => "Tits",
        }
    }

    /// Prime factorization of the group order.
    fn order_exponents(self) -> &'static [(u32, u32)] {
        match self {
            Sporadic::M11 => &[(2, 4), (3, 2), (5, 1), (11, 1)],
            Sporadic::M12 => &[(2, 6), (3, 3), (5, 1), (11, 1)],
            Sporadic::M22 => &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)],
            Sporadic::M23 => &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)],
            Sporadic::M24 => &[(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)],
            Sporadic::J1 => &[(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)],
            Sporadic::J2 => &[(2, 7), (3, 3), (5, 2), (7, 1)],
            Sporadic::J3 => &[(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)],
            Sporadic::J4 => &[(2, 21), (3, 3), (5, 1), (7, 1), (11, 3), (23, 1), (29, 1), (31, 1), (37, 1), (43, 1)],
            Sporadic::Co1 => &[(2, 21), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1)],
            Sporadic::Co2 => &[(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)],
            Sporadic::Co3 => &[(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)],
            Sporadic::Fi22 => &[(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)],
            Sporadic::Fi23 => &[(2, 18), (3, 13), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (23, 1)],
            Sporadic::Fi24 => &[(2, 21), (3, 16), (5, 2), (7, 3), (11, 1), (13, 1), (17, 1), (23, 1), (29, 1)],
            Sporadic::HS => &[(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)],
            Sporadic::McL => &[(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)],
            Sporadic::He => &[(2, 10), (3, 3), (5, 2), (7, 3), (17, 1)],
            Sporadic::Ru => &[(2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1)],
            Sporadic::Suz => &[(2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1)],
            Sporadic::ON => &[(2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1)],
            Sporadic::HN => &[(2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1)],
            Sporadic::Ly => &[(2, 8), (3, 7), (5, 6), (7, 1), (11, 1), (31, 1), (37, 1), (67, 1)],
            Sporadic::Th => &[(2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1)],
            Sporadic::B => {
                &[(2, 41), (3, 13), (5, 6), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (31, 1), (47, 1)]
            }
            Sporadic::M => &[
                (2, 46),
                (3, 20),
                (5, 9),
                (7, 6),
                (11, 2),
                (13, 3),
                (17, 1),
                (19, 1),
                (23, 1),
                (29, 1),
                (31, 1),
                (41, 1),
                (47, 1),
                (59, 1),
                (71, 1),
            ],
            Sporadic::Tits => &[(2, 11), (3, 3), (5, 2), (13, 1)],
        }
    }

    pub fn order(self) -> Natural {
        self.order_exponents()
            .iter()
            .fold(Natural::from(1u32), |acc, &(p, e)| acc * num_traits::pow(Natural::from(p), e as usize))
    }

    pub fn prime_spectrum(self) -> Vec<Natural> {
        self.order_exponents().iter().map(|&(p, _)| Natural::from(p)).collect()
    }

    pub fn exponent_of(self, p: u32) -> u32 {
        self.order_exponents().iter().find(|(q, _)| *q == p).map(|(_, e)| *e).unwrap_or(0)
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sporadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim();
        let found = match key {
            "M(23)" => Some(Sporadic::Fi23),
            "M(24)'" | "Fi24" | "Fi24p" => Some(Sporadic::Fi24),
            "O'N" => Some(Sporadic::ON),
            "2F4(2)'" => Some(Sporadic::Tits),
            _ => Sporadic::ALL.iter().copied().find(|g| g.name() == key),
        };
        found.ok_or_else(|| Error::Parse(format!("unknown sporadic group {key:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_published_decimal_values() {
        let expected = [
            (Sporadic::M11, "7920"),
            (Sporadic::M12, "95040"),
            (Sporadic::M22, "443520"),
            (Sporadic::M23, "10200960"),
            (Sporadic::M24, "244823040"),
            (Sporadic::J1, "175560"),
            (Sporadic::J2, "604800"),
            (Sporadic::J3, "50232960"),
            (Sporadic::J4, "86775571046077562880"),
            (Sporadic::Co1, "4157776806543360000"),
            (Sporadic::Co2, "42305421312000"),
            (Sporadic::Co3, "495766656000"),
            (Sporadic::Fi22, "64561751654400"),
            (Sporadic::Fi23, "4089470473293004800"),
            (Sporadic::Fi24, "1255205709190661721292800"),
            (Sporadic::HS, "44352000"),
            (Sporadic::McL, "898128000"),
            (Sporadic::He, "4030387200"),
            (Sporadic::Ru, "145926144000"),
            (Sporadic::Suz, "448345497600"),
            (Sporadic::ON, "460815505920"),
            (Sporadic::HN, "273030912000000"),
            (Sporadic::Ly, "51765179004000000"),
            (Sporadic::Th, "90745943887872000"),
            (Sporadic::B, "4154781481226426191177580544000000"),
            (Sporadic::M, "808017424794512875886459904961710757005754368000000000"),
            (Sporadic::Tits, "17971200"),
        ];
        for (g, decimal) in expected {
            assert_eq!(g.order().to_string(), decimal, "{g}");
        }
    }

    #[test]
    fn names_round_trip() {
        for g in Sporadic::ALL {
            assert_eq!(g.name().parse::<Sporadic>().unwrap(), g);
        }
        assert_eq!("M(23)".parse::<Sporadic>().unwrap(), Sporadic::Fi23);
        assert_eq!("M(24)'".parse::<Sporadic>().unwrap(), Sporadic::Fi24);
        assert!("M13".parse::<Sporadic>().is_err());
    }
}
