# Distinguished exponents of Puiseux series and Kummer-type root lifting
